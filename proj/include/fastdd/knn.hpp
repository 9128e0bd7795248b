#pragma once

#include <span>
#include <vector>

#include "fastdd/fdata.hpp"
#include "fastdd/stats.hpp"

namespace fdd {

/// Vote among the k nearest training points. Every point at the same
/// distance as the k-th nearest one belongs to the neighborhood. Returns 1
/// only if class 1 strictly outnumbers class 0. With a positive
/// `tieTolerance`, distances up to (1 + tieTolerance) times the k-th one
/// count as ties, for distances that carry rounding error.
Label knn_vote(std::span<const double> distances, std::span<const Label> labels, int k, double tieTolerance = 0.0);

/// Leave-one-out misclassification counts for k = 1..kMax, from a symmetric
/// matrix of pairwise distances. Entry k-1 of the result belongs to k.
std::vector<int> knn_loo_errors(const Matrix& distances, std::span<const Label> labels, int kMax,
                                double tieTolerance = 0.0);

/// Smallest k attaining the minimal LOO error count.
int argmin_k(std::span<const int> looErrors);

}  // namespace fdd
