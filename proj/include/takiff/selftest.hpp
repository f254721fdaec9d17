#pragma once

#include <string>
#include <vector>

namespace takiff {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

inline constexpr int kNumCriteria = 9;

/// Runs one acceptance criterion (1..9). Exceptions are caught and reported
/// as failures.
CriterionResult run_criterion(int id);
/// Runs the given criteria, or all of them when the list is empty.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});
/// "criterion N: PASS|FAIL  title  (detail; t s)"
std::string format_result(const CriterionResult& r);

}  // namespace takiff
