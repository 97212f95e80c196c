#pragma once

// Reproduction checks run by `plasmon-dimer check` and the acceptance test.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace pdimer {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::size_t workers = 0;  // 0: worker_count()
  unsigned long long seed = 20240611;
  /// Called as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// "PASS  3  entropy bound ...: detail (0.4 s)"
void print_criterion(std::ostream& out, const CriterionResult& r);

}  // namespace pdimer
