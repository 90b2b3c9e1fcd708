#pragma once

// Candidate budgets and a minimal sharded loop.

#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "linset/error.hpp"

namespace linset {

// Default candidate budget: LINSET_BUDGET if set, else 2^32.
std::uint64_t default_budget();

// Throws BudgetExceeded naming `what` if need > budget.
void check_budget(std::uint64_t need, std::uint64_t budget, const std::string& what);

struct RunOptions {
  std::uint64_t budget = default_budget();
  unsigned threads = 1;
};

// Runs fn(i, worker) for i in [0, count) split round-robin over `threads`
// workers. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i, 0u);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += threads) fn(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace linset
