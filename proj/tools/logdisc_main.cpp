// logdisc: discriminant data and non-squareness certificates for the
// truncated logarithm polynomials F_n(x) = 1 + x + x^2/2 + ... + x^n/n.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "logdisc/certificate.hpp"
#include "logdisc/discriminant.hpp"
#include "logdisc/version.hpp"
#include "sweep/record.hpp"
#include "sweep/sweep.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kInvalidCertificate = 3,
  kNotCertified = 4,
};

std::string join_primes(const std::vector<logdisc::Integer>& primes) {
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i != 0) s += ",";
    s += primes[i].get_str(10);
  }
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace logdisc;

  CLI::App app{"Discriminants of truncated logarithm polynomials and non-square certificates"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::uint64_t n = 0;
  std::optional<std::uint64_t> modulus;
  bool exact_flag = false;

  auto* disc = app.add_subcommand("disc", "disc(F_n), exactly or modulo a prime L > n");
  disc->add_option("n", n, "degree")->required()->check(CLI::PositiveNumber);
  auto* disc_mod_opt = disc->add_option("--mod", modulus, "prime modulus L > n");
  auto* disc_exact_opt = disc->add_flag("--exact", exact_flag, "exact rational value (default)");
  disc_mod_opt->excludes(disc_exact_opt);

  auto* pn = app.add_subcommand("pn", "P_n = prod of L_n F_n over nontrivial n-th roots of unity");
  pn->add_option("n", n, "degree")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  pn->add_option("--mod", modulus, "prime modulus");

  std::uint64_t m = 0;
  auto* xy = app.add_subcommand("xy", "X(m), Y(m) and the exceptional set E_m");
  xy->add_option("m", m, "split cofactor")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));

  ClassifyConfig classify_config;
  bool no_exact_fallback = false;
  auto* classify_cmd = app.add_subcommand("classify", "certificate for a single n");
  classify_cmd->add_option("n", n, "degree")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-witness-attempts", classify_config.max_witness_attempts);
  classify_cmd->add_option("--exact-cap", classify_config.exact_degree_cap);
  classify_cmd->add_flag("--no-exact-fallback", no_exact_fallback);

  sweep::SweepConfig sweep_config;
  sweep_config.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string filter = "all";
  auto* sweep_cmd = app.add_subcommand("sweep", "classify a range of n into a JSONL file");
  sweep_cmd->add_option("--from", sweep_config.from)->required();
  sweep_cmd->add_option("--to", sweep_config.to)->required();
  sweep_cmd->add_option("--filter", filter)->check(CLI::IsMember({"all", "mod4eq1", "odd-squares"}));
  sweep_cmd->add_option("--jobs", sweep_config.jobs)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_config.out)->required();
  sweep_cmd->add_flag("--resume", sweep_config.resume);
  sweep_cmd->add_option("--max-witness-attempts", sweep_config.max_witness_attempts);
  sweep_cmd->add_option("--exact-cap", sweep_config.exact_degree_cap);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-check every certificate in a sweep file");
  verify->add_option("path", verify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*disc) {
      if (modulus) {
        std::cout << disc_mod(n, *modulus) << '\n';
      } else {
        std::cout << disc_exact(n).exact->to_string() << '\n';
      }
    } else if (*pn) {
      if (modulus) {
        std::cout << p_n_mod(n, *modulus) << '\n';
      } else {
        std::cout << p_n_exact(n).get_str(10) << '\n';
      }
    } else if (*xy) {
      const XYProfile profile = exceptional_set(m);
      std::cout << "X=" << profile.x.to_string() << '\n'
                << "Y=" << profile.y.to_string() << '\n'
                << "E=" << join_primes(profile.exceptional) << '\n';
    } else if (*classify_cmd) {
      classify_config.allow_exact_fallback = !no_exact_fallback;
      const sweep::SweepRecord record = sweep::classify_record(n, classify_config);
      std::cout << sweep::to_line(record) << '\n';
      if (record.diagnostic) {
        std::cerr << "error: " << *record.diagnostic << '\n';
        return kComputation;
      }
      if (record.status != "certified") return kNotCertified;
    } else if (*sweep_cmd) {
      sweep_config.filter = *sweep::parse_filter(filter);
      if (sweep_config.from > sweep_config.to) {
        std::cerr << "error: --from must not exceed --to\n";
        return kUsage;
      }
      const sweep::SweepSummary s = sweep::run_sweep(sweep_config);
      std::cout << "certified=" << s.certified << " unresolved=" << s.unresolved
                << " counterexamples=" << s.counterexamples << " skipped=" << s.skipped
                << " wall_ms=" << s.wall_ms << '\n';
      if (s.unresolved != 0 || s.counterexamples != 0) return kNotCertified;
    } else if (*verify) {
      const sweep::FileReport report = sweep::verify_file(verify_path);
      for (const sweep::FileIssue& issue : report.issues) {
        std::cout << "line " << issue.line;
        if (issue.n) std::cout << " n=" << *issue.n;
        std::cout << ": " << issue.message << '\n';
      }
      std::cout << "records=" << report.records << " valid=" << report.valid
                << " invalid=" << report.issues.size() << '\n';
      if (!report.ok()) return kInvalidCertificate;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}
