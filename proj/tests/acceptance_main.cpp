// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: rubikred_acceptance [criterion-id]

#include <cstdlib>
#include <iostream>
#include <string>

#include "rubikred/acceptance.hpp"

int main(int argc, char** argv) {
  rubikred::AcceptanceOptions options;
  if (argc > 1) options.only = std::stoi(argv[1]);
  bool all = true;
  for (const auto& r : rubikred::run_acceptance(options)) {
    std::cout << rubikred::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
