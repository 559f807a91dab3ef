#include "sweep/sweep.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "logdisc/version.hpp"

namespace logdisc::sweep {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Keeps only complete, parseable lines and returns the n values they hold.
// The file is truncated after the last good line.
std::set<std::uint64_t> recover_existing(const std::string& path) {
  std::set<std::uint64_t> seen;
  std::ifstream in(path, std::ios::binary);
  if (!in) return seen;
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();

  std::size_t keep = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    const std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) break;  // unterminated tail
    const std::string line = content.substr(pos, eol - pos);
    try {
      if (!line.empty()) seen.insert(from_line(line).n);
    } catch (const std::invalid_argument&) {
      break;
    }
    pos = eol + 1;
    keep = pos;
  }
  if (keep != content.size()) std::filesystem::resize_file(path, keep);
  return seen;
}

}  // namespace

std::optional<Filter> parse_filter(const std::string& name) {
  if (name == "all") return Filter::kAll;
  if (name == "mod4eq1") return Filter::kMod4Eq1;
  if (name == "odd-squares") return Filter::kOddSquares;
  return std::nullopt;
}

std::vector<std::uint64_t> sweep_targets(const SweepConfig& config) {
  std::vector<std::uint64_t> targets;
  const std::uint64_t lo = std::max<std::uint64_t>(config.from, 1);
  switch (config.filter) {
    case Filter::kAll:
      for (std::uint64_t n = lo; n <= config.to; ++n) targets.push_back(n);
      break;
    case Filter::kMod4Eq1:
      for (std::uint64_t n = lo; n <= config.to; ++n) {
        if (n % 4 == 1) targets.push_back(n);
      }
      break;
    case Filter::kOddSquares:
      for (std::uint64_t k = 1; k * k <= config.to; k += 2) {
        if (k * k >= lo) targets.push_back(k * k);
      }
      break;
  }
  return targets;
}

SweepRecord classify_record(std::uint64_t n, const ClassifyConfig& config) {
  SweepRecord record;
  record.n = n;
  record.tool_version = kVersion;
  const auto start = Clock::now();
  try {
    record.certificate = classify(n, config);
  } catch (const std::exception& e) {
    record.certificate = cert::Unresolved{0};
    record.diagnostic = e.what();
  }
  record.ms = elapsed_ms(start);
  record.status = status_for(record.certificate);
  return record;
}

SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const SweepRecord&)>& on_record) {
  if (config.from > config.to) throw std::invalid_argument("sweep: from > to");
  if (config.jobs == 0) throw std::invalid_argument("sweep: jobs must be >= 1");
  const auto start = Clock::now();

  std::set<std::uint64_t> done;
  if (config.resume) done = recover_existing(config.out);

  std::ofstream out(config.out, config.resume ? std::ios::app | std::ios::binary
                                              : std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + config.out + "' for writing");

  SweepSummary summary;
  std::vector<std::uint64_t> pending;
  for (std::uint64_t n : sweep_targets(config)) {
    if (done.count(n) != 0) {
      ++summary.skipped;
    } else {
      pending.push_back(n);
    }
  }

  const ClassifyConfig classify_config{config.max_witness_attempts, true, config.exact_degree_cap};
  std::atomic<std::size_t> next{0};
  std::mutex write_mutex;
  bool write_failed = false;

  auto worker = [&] {
    for (std::size_t i = next++; i < pending.size(); i = next++) {
      const SweepRecord record = classify_record(pending[i], classify_config);
      std::lock_guard lock(write_mutex);
      out << to_line(record) << '\n';
      out.flush();
      if (!out) write_failed = true;
      if (record.status == "certified") {
        ++summary.certified;
      } else if (record.status == "counterexample") {
        ++summary.counterexamples;
      } else {
        ++summary.unresolved;
      }
      if (on_record) on_record(record);
    }
  };

  const unsigned jobs = std::min<std::size_t>(config.jobs, std::max<std::size_t>(pending.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  if (write_failed) throw std::runtime_error("write to '" + config.out + "' failed");
  summary.wall_ms = elapsed_ms(start);
  return summary;
}

FileReport verify_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");

  FileReport report;
  std::set<std::uint64_t> seen;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    ++report.records;
    SweepRecord record;
    try {
      record = from_line(line);
    } catch (const std::invalid_argument& e) {
      report.issues.push_back({lineno, std::nullopt, std::string("malformed record: ") + e.what()});
      continue;
    }
    if (!seen.insert(record.n).second) {
      report.issues.push_back({lineno, record.n, "duplicate record for n"});
      continue;
    }
    if (record.status != status_for(record.certificate)) {
      report.issues.push_back({lineno, record.n, "status does not match certificate type"});
      continue;
    }
    const Verification v = verify_certificate(record.n, record.certificate);
    if (!v) {
      report.issues.push_back({lineno, record.n, v.diagnostic});
      continue;
    }
    ++report.valid;
  }
  return report;
}

}  // namespace logdisc::sweep
