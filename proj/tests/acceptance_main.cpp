// One PASS/FAIL line per reproduction criterion; nonzero exit on any failure.

#include <iostream>

#include "pdimer/acceptance.hpp"

int main() {
  pdimer::AcceptanceOptions opts;
  opts.on_result = [](const pdimer::CriterionResult& r) {
    pdimer::print_criterion(std::cout, r);
    std::cout.flush();
  };
  int failed = 0;
  for (const auto& r : pdimer::run_acceptance(opts)) failed += r.passed ? 0 : 1;
  std::cout << (failed ? "acceptance: FAILED" : "acceptance: all passed") << '\n';
  return failed ? 1 : 0;
}
