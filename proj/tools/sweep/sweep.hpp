#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logdisc/certificate.hpp"
#include "sweep/record.hpp"

namespace logdisc::sweep {

enum class Filter { kAll, kMod4Eq1, kOddSquares };

// Accepts "all", "mod4eq1", "odd-squares".
std::optional<Filter> parse_filter(const std::string& name);

struct SweepConfig {
  std::uint64_t from = 1;
  std::uint64_t to = 1;
  Filter filter = Filter::kAll;
  unsigned jobs = 1;
  unsigned max_witness_attempts = 200;
  std::uint64_t exact_degree_cap = 1000;
  std::string out;
  bool resume = false;
};

struct SweepSummary {
  std::size_t certified = 0;
  std::size_t unresolved = 0;
  std::size_t counterexamples = 0;
  std::size_t skipped = 0;  // already present when resuming
  double wall_ms = 0.0;
};

// The n values in [from, to] that pass the filter, ascending.
std::vector<std::uint64_t> sweep_targets(const SweepConfig& config);

// Classifies one n and times it. Exceptions become an Unresolved record
// carrying the message as diagnostic.
SweepRecord classify_record(std::uint64_t n, const ClassifyConfig& config);

// Appends one record per target to config.out. With resume, n values already
// recorded are skipped and a trailing partial line is discarded first.
// Throws std::runtime_error if the file cannot be written.
SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const SweepRecord&)>& on_record = {});

struct FileIssue {
  std::size_t line = 0;
  std::optional<std::uint64_t> n;
  std::string message;
};

struct FileReport {
  std::size_t records = 0;
  std::size_t valid = 0;
  std::vector<FileIssue> issues;

  bool ok() const { return issues.empty(); }
};

// Re-verifies every certificate in a sweep file.
// Throws std::runtime_error if the file cannot be opened.
FileReport verify_file(const std::string& path);

}  // namespace logdisc::sweep
