#pragma once

#include "kummer/checks.hpp"

namespace kummer {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  long cases = 0;
  std::vector<std::string> lines;  // failure details / notes
};

/// Acceptance criteria, id in [1, 7]. Each is self-contained and seeded.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

}  // namespace kummer
