#include "sweep/record.hpp"

#include <stdexcept>

#include "logdisc/integer.hpp"

namespace logdisc::sweep {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string dec(std::uint64_t v) { return std::to_string(v); }

// Large integers travel as decimal strings; plain JSON numbers are accepted too.
std::uint64_t read_u64(const json& obj, const char* key) {
  if (!obj.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  if (v.is_string()) {
    Integer x;
    const std::string& s = v.get_ref<const std::string&>();
    if (s.empty() || s[0] == '-' || s[0] == '+' || x.set_str(s, 10) != 0 || !fits_u64(x)) {
      throw std::invalid_argument(std::string("field '") + key + "' is not a non-negative integer");
    }
    return to_u64(x);
  }
  throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
}

}  // namespace

std::string status_for(const Certificate& c) {
  if (std::holds_alternative<cert::Counterexample>(c)) return "counterexample";
  if (std::holds_alternative<cert::Unresolved>(c)) return "unresolved";
  return "certified";
}

ordered_json certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["type"] = std::string(certificate_type(c));
  std::visit(overloaded{
                 [&](const cert::OddValuation& v) { j["ell"] = dec(v.ell); },
                 [&](const cert::OddPrimePowerValuation& v) {
                   j["p"] = dec(v.p);
                   j["e"] = v.e;
                 },
                 [&](const cert::SplitTheorem& s) {
                   j["m"] = s.m;
                   j["q"] = dec(s.q);
                 },
                 [&](const cert::NonResidueWitness& w) {
                   j["ell"] = dec(w.ell);
                   j["residue"] = dec(w.residue);
                 },
                 [&](const cert::Unresolved& u) { j["witness_attempts"] = u.witness_attempts; },
                 [](const auto&) {},
             },
             c);
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw std::invalid_argument("certificate must be an object with a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "NegativeSign") return cert::NegativeSign{};
  if (type == "OddValuation") return cert::OddValuation{read_u64(j, "ell")};
  if (type == "OddPrimePowerValuation") {
    return cert::OddPrimePowerValuation{read_u64(j, "p"), static_cast<unsigned>(read_u64(j, "e"))};
  }
  if (type == "SplitTheorem") return cert::SplitTheorem{read_u64(j, "m"), read_u64(j, "q")};
  if (type == "NonResidueWitness") {
    return cert::NonResidueWitness{read_u64(j, "ell"), read_u64(j, "residue")};
  }
  if (type == "ExactNonSquare") return cert::ExactNonSquare{};
  if (type == "TrivialN1") return cert::TrivialN1{};
  if (type == "Counterexample") return cert::Counterexample{};
  if (type == "Unresolved") {
    return cert::Unresolved{static_cast<unsigned>(read_u64(j, "witness_attempts"))};
  }
  throw std::invalid_argument("unknown certificate type '" + type + "'");
}

std::string to_line(const SweepRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["status"] = r.status;
  j["certificate"] = certificate_to_json(r.certificate);
  j["ms"] = r.ms;
  j["tool_version"] = r.tool_version;
  if (r.diagnostic) j["diagnostic"] = *r.diagnostic;
  return j.dump();
}

SweepRecord from_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
  SweepRecord r;
  r.n = read_u64(j, "n");
  if (!j.contains("status") || !j.at("status").is_string()) throw std::invalid_argument("missing field 'status'");
  r.status = j.at("status").get<std::string>();
  if (!j.contains("certificate")) throw std::invalid_argument("missing field 'certificate'");
  r.certificate = certificate_from_json(j.at("certificate"));
  if (j.contains("ms")) {
    if (!j.at("ms").is_number()) throw std::invalid_argument("field 'ms' must be a number");
    r.ms = j.at("ms").get<double>();
  }
  if (j.contains("tool_version") && j.at("tool_version").is_string()) {
    r.tool_version = j.at("tool_version").get<std::string>();
  }
  if (j.contains("diagnostic") && j.at("diagnostic").is_string()) {
    r.diagnostic = j.at("diagnostic").get<std::string>();
  }
  return r;
}

}  // namespace logdisc::sweep
