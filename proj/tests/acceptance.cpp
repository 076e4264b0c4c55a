// Runs acceptance criteria 1..11, one PASS/FAIL line each. Optional arguments
// select criterion ids.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "fgt/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  bool all = true;
  for (const auto& r : fgt::acceptance::run_all(only)) {
    std::cout << fgt::acceptance::format_line(r) << std::endl;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
