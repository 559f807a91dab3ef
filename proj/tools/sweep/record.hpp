#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "logdisc/certificate.hpp"

namespace logdisc::sweep {

// One JSONL line of a sweep file.
struct SweepRecord {
  std::uint64_t n = 0;
  std::string status;  // "certified" | "counterexample" | "unresolved"
  Certificate certificate;
  double ms = 0.0;
  std::string tool_version;
  std::optional<std::string> diagnostic;  // only when classification threw
};

std::string status_for(const Certificate& c);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
// Throws std::invalid_argument on an unknown type or missing field.
Certificate certificate_from_json(const nlohmann::json& j);

std::string to_line(const SweepRecord& r);
// Throws std::invalid_argument on malformed input.
SweepRecord from_line(const std::string& line);

}  // namespace logdisc::sweep
