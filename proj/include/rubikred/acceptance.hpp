#pragma once

// The ten acceptance criteria, runnable from the test suite and from
// `rubikred selftest`. Each check is seeded and timed; a criterion passes
// only when its check holds and it finished inside its time limit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rubikred {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240917;
  // Run only this criterion (1..10).
  std::optional<int> only;
};

inline constexpr int kCriterionCount = 10;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
CriterionResult run_criterion(int id, std::uint64_t seed);

// "PASS  3 forward-direction-at-scale  1.234 s / 60 s  <detail>"
std::string format_result(const CriterionResult& result);

}  // namespace rubikred
