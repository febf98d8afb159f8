#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsf/parallel.hpp"

namespace wsf {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int workers = 0;  // 0: default_worker_count()
  Execution execution = Execution::parallel;
  std::int64_t triangle_samples = 1'000'000;
  std::int64_t kirchhoff_samples = 100'000;
};

/// Result of one exact-check suite. `rows` is the suite's table (for
/// `bounds`: one row per instance with the exact value and the bound).
struct VerifyReport {
  std::string suite;
  bool passed = true;
  double max_discrepancy = 0.0;
  long long instances = 0;
  std::vector<std::string> details;
  std::vector<std::string> failures;  // instance description and reproduction command
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// martingale, domination, bounds, good-subset, electrical-identities, kirchhoff.
const std::vector<std::string>& verify_suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport verify_suite(const std::string& name, const VerifyOptions& options = {});

void write_verify_csv(const VerifyReport& report, std::ostream& out);

/// Human-readable summary: one status line, details, then failures.
void print_verify_report(const VerifyReport& report, std::ostream& out);

}  // namespace wsf
