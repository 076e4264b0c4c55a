#pragma once

#include <string>
#include <vector>

namespace fgt::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0;
  double budget_seconds = 0;
  /// Correct and within the time budget.
  bool passed = false;
  std::string detail;
};

struct CriterionInfo {
  int id;
  std::string title;
  double budget_seconds;
};

/// Criteria 1..11 in order.
const std::vector<CriterionInfo>& criteria();

/// Runs one criterion. Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);

/// Runs the selected criteria (all when empty).
std::vector<CriterionResult> run_all(const std::vector<int>& only = {});

/// "PASS  3  Mathieu chain  0.012 s / 10 s  detail".
std::string format_line(const CriterionResult& r);

}  // namespace fgt::acceptance
