#pragma once

// The acceptance battery: eleven exact checks at desk scale, shared by the
// acceptance test binary and `linset verify-suite`.

#include <string>
#include <vector>

namespace linset {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  // A check that a proven statement predicts failed (as opposed to a crash).
  bool falsified = false;
  std::vector<std::string> notes;
  double seconds = 0;
};

std::string criterion_title(int id);

// Runs one criterion. Exceptions are caught and reported as a failure.
CriterionResult run_criterion(int id);

// "AC<k> PASS|FAIL <title> (<seconds>s): note; note"
std::string format_result(const CriterionResult& r);

}  // namespace linset
