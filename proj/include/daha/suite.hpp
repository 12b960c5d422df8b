#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "daha/json_io.hpp"

namespace daha {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Sign handed to make_tau by the generator-relation check; -1 injects the
  /// sign-flip mutation.
  int tau_sign = 1;
  /// Criteria to run (1..9); empty means all.
  std::set<int> only;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
  std::optional<io::Json> counterexample;  // first failing case
  double seconds = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

SuiteReport run_suite(const SuiteOptions& opts);

/// Timings are omitted unless asked for, so that a fixed seed gives a
/// byte-identical document.
io::Json to_json(const SuiteReport& r, bool with_timings = false);

/// One line per criterion: "[PASS] 3 bernstein-relations (12 cases)".
std::string format_report(const SuiteReport& r);

}  // namespace daha
