#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fastdd/fdata.hpp"

namespace fdd {

/// How a cross-validation is split.
struct CVPlan {
  int folds = 10;
  bool leaveOneOut = false;
  std::uint64_t seed = 0;
  bool stratified = true;

  void validate() const;
};

/// Fold index of every observation. Stratified plans shuffle each class
/// separately and deal its members round-robin over the folds; the number of
/// folds is capped at the sample size. Leave-one-out puts observation i in
/// fold i.
std::vector<int> assign_folds(std::span<const Label> labels, const CVPlan& plan);

/// Number of distinct folds assign_folds produces for n observations.
int fold_count(const CVPlan& plan, std::size_t n);

/// Worker count from the FDD_THREADS environment variable (default 1).
std::size_t default_threads();

/// Runs fn(0..n-1) on up to `threads` workers. Work units must not share
/// mutable state; the first exception thrown is rethrown after all workers
/// have stopped.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace fdd
