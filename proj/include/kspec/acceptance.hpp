#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace kspec {

enum class VerifyLevel { quick, full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool gating = true;
  std::string detail;
  double seconds = 0.0;
};

/// Injection points so the runner itself can be tested against a broken formula.
struct AcceptanceHooks {
  std::function<double(double, double)> k_from_delta;
};

/// Runs the acceptance criteria; `full` widens the seeded random sweeps.
std::vector<CriterionResult> run_acceptance(VerifyLevel level, const AcceptanceHooks& hooks = {},
                                            std::ostream* progress = nullptr);

/// Runs one criterion by id (1-based).
CriterionResult run_criterion(int id, VerifyLevel level, const AcceptanceHooks& hooks = {});

inline constexpr int kCriterionCount = 11;

bool all_gating_passed(const std::vector<CriterionResult>& results);

/// One "[PASS]/[FAIL] #id name (time) detail" line per criterion.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

/// Round an upper bound up to `digits` decimals (reference values are stored this way).
double round_up(double value, int digits);

}  // namespace kspec
