#include "linset/runtime.hpp"

#include <cstdlib>

namespace linset {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LINSET_BUDGET")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1ull << 32;
}

void check_budget(std::uint64_t need, std::uint64_t budget, const std::string& what) {
  if (need > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                what + " needs " + std::to_string(need) + " candidates, budget is " + std::to_string(budget));
  }
}

}  // namespace linset
