// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <chrono>
#include <iostream>

#include "prym/selftest.hpp"

int main() {
  const prym::SuiteConfig cfg;
  bool all = true;
  int n = 0;
  for (const auto& [name, suite] : prym::all_suites()) {
    const auto t0 = std::chrono::steady_clock::now();
    const prym::SuiteResult r = suite(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && r.passed;
    std::cout << "criterion " << ++n << ": " << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.cases
              << " cases, " << secs << " s)";
    if (!r.message.empty()) std::cout << ": " << r.message;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
