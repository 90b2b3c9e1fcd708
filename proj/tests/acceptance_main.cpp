// Runs the acceptance battery; one line per criterion. Exit 0 iff all pass,
// 3 if any proven statement was contradicted, 1 for other failures.
#include <cstdlib>
#include <iostream>
#include <string>

#include "linset/acceptance.hpp"

int main(int argc, char** argv) {
  bool all = true, falsified = false;
  for (int id = 1; id <= linset::kCriterionCount; ++id) {
    if (argc > 1) {
      bool wanted = false;
      for (int i = 1; i < argc; ++i) wanted = wanted || std::atoi(argv[i]) == id;
      if (!wanted) continue;
    }
    const auto r = linset::run_criterion(id);
    std::cout << linset::format_result(r) << std::endl;
    all = all && r.pass;
    falsified = falsified || r.falsified;
  }
  if (falsified) return 3;
  return all ? 0 : 1;
}
