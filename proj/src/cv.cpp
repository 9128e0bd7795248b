#include "fastdd/cv.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "fastdd/error.hpp"
#include "fastdd/seed.hpp"

namespace fdd {

void CVPlan::validate() const {
  if (!leaveOneOut && folds < 2) throw InvalidConfig("cross-validation needs at least two folds");
}

int fold_count(const CVPlan& plan, std::size_t n) {
  if (plan.leaveOneOut) return static_cast<int>(n);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(plan.folds), n));
}

std::vector<int> assign_folds(std::span<const Label> labels, const CVPlan& plan) {
  plan.validate();
  const std::size_t n = labels.size();
  std::vector<int> fold(n, 0);
  if (plan.leaveOneOut) {
    std::iota(fold.begin(), fold.end(), 0);
    return fold;
  }
  const int k = fold_count(plan, n);
  if (k < 2) throw InvalidInput("too few observations for cross-validation");

  std::vector<std::vector<std::size_t>> groups(plan.stratified ? 2 : 1);
  for (std::size_t i = 0; i < n; ++i) groups[plan.stratified && labels[i] == 1 ? 1 : 0].push_back(i);

  int next = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::mt19937_64 rng(derive_seed(plan.seed, {g}));
    std::shuffle(groups[g].begin(), groups[g].end(), rng);
    for (std::size_t i : groups[g]) {
      fold[i] = next;
      next = (next + 1) % k;
    }
  }
  return fold;
}

std::size_t default_threads() {
  if (const char* env = std::getenv("FDD_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex errorMutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(errorMutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fdd
