// One line per acceptance criterion; exits nonzero if any criterion fails.
#include <chrono>
#include <iostream>

#include "validation.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  shg::validation::Options options;
  int failed = 0;
  const auto start = clock::now();
  for (const auto& name : shg::validation::check_names()) {
    options.only = {name};
    const auto t0 = clock::now();
    const auto results = shg::validation::run_checks(options);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    for (const auto& r : results) {
      std::cout << shg::validation::format_line(r) << " [" << secs << " s]" << std::endl;
      failed += r.passed ? 0 : 1;
    }
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::cout << (10 - failed) << "/10 criteria passed in " << total << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
