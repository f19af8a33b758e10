// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1 for ctest).

#include <cstdlib>
#include <iostream>
#include <string>

#include "exprim/corpus.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (int id = 1; id <= exprim::corpus::kCriteria; ++id) {
    const auto r = exprim::corpus::run_criterion(id, verbose ? &std::cout : nullptr);
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << " (" << r.seconds
              << " s of " << r.budget_seconds << " s)\n";
    if (!r.passed) {
      ++failed;
      if (!verbose) {
        for (const auto& line : r.details) {
          if (line.rfind("FAIL", 0) == 0) std::cout << "    " << line << '\n';
        }
      }
    }
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
