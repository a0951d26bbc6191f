#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hecke/divisor_sums.hpp"

namespace hecke {

// One acceptance criterion: a titled group of checks with a runtime budget.
struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = none
  std::function<std::vector<EvalReport>()> run;
};

const std::vector<Criterion>& acceptance_criteria();

// verify suites: bko, equivariance, divisor-hecke, p-plication, algebra, niebur.
const std::vector<std::string>& suite_names();
// Every case of the suite; a case that throws is reported as failed with the error.
std::vector<EvalReport> run_suite(const std::string& name);

}  // namespace hecke
