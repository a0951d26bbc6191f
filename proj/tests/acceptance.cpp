#include <chrono>
#include <cstdio>
#include <iostream>

#include "hecke/suites.hpp"

int main() {
  int failed = 0;
  for (const hecke::Criterion& c : hecke::acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<hecke::EvalReport> reports = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t bad = 0;
    for (const auto& r : reports) bad += r.passed ? 0 : 1;
    const bool over_budget = c.budget_seconds > 0 && secs > c.budget_seconds;
    const bool ok = !reports.empty() && bad == 0 && !over_budget;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << reports.size() << " checks, "
              << timing;
    if (c.budget_seconds > 0) std::cout << " of " << c.budget_seconds << "s";
    std::cout << ")\n";
    for (const auto& r : reports)
      if (!r.passed)
        std::cout << "    failed: " << r.label << ": " << r.lhs << " vs " << r.rhs
                  << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    if (over_budget) std::cout << "    over the runtime budget\n";
  }
  return failed == 0 ? 0 : 1;
}
