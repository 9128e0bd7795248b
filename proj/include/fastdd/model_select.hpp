#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fastdd/classifier.hpp"
#include "fastdd/cv.hpp"
#include "fastdd/fdata.hpp"
#include "fastdd/ls_transform.hpp"

namespace fdd {

using BigInt = boost::multiprecision::cpp_int;

/// Number of dichotomies of N points in general position realizable by
/// hyperplanes in d dimensions: 2 * sum_{k<d} binom(N-1, k).
BigInt count_separations(long long n, long long d);
/// Natural log of count_separations, summed in log space.
double log_count_separations(long long n, long long d);

/// Empirical risk plus the Vapnik-Chervonenkis penalty of an (L+S)-dim
/// linear rule on m + n points:
/// eps + sqrt(ln((m+n) C(m+n, L+S+1)) / (2 (m+n))).
double vc_bound(double epsilon, long long m, long long n, int L, int S);

/// Largest admissible L + S for M discretization points, ceil(M / 2).
int max_ls_dim(std::size_t m);

/// Every (L, S) with 2 <= L + S <= ceil(M / 2), ordered by L + S, then S.
/// With `maxL`, pairs with L > *maxL are dropped.
std::vector<LSConfig> candidate_pairs(std::size_t m, std::optional<int> maxL = std::nullopt);

/// Upper limit on L implied by the sampling density: T / (smallest gap) + 1.
int sampling_cap_on_L(const FunctionalDataset& data);

/// Finite-dimensional representation of a curve: either the LS embedding or
/// values at fixed time points.
struct FeatureSpec {
  std::optional<LSConfig> ls;
  std::vector<double> points;  // used when ls is empty

  int dim() const;
  Vector apply(const InterpolatedFunction& g, double domainEnd) const;
  Matrix apply(const FunctionalDataset& data) const;
};

struct PairScore {
  LSConfig config;
  double epsilon = 0.0;
  double epsilonMax = 0.0;
  std::optional<double> cvError;
  bool selected = false;
};

struct SelectionOutcome {
  FeatureSpec features;
  double cvError = 0.0;
  /// Number of candidate representations that were cross-validated.
  int cvIterations = 0;
  /// Per-pair details for the LS selectors (empty for crossDHB).
  std::vector<PairScore> scores;
  /// CV error after each accepted crossDHB step.
  std::vector<double> stepErrors;
};

/// Cross-validated misclassification rate of `spec` on the rows of `points`.
/// A fold whose fit fails counts all its held-out points as errors.
double cv_error(const ClassifierSpec& spec, const Matrix& points, std::span<const Label> labels,
                std::span<const int> folds, std::uint64_t seed);

/// Screens all candidate pairs by the VC bound on the LDA training error,
/// keeps those whose bound does not exceed the fifth smallest one, and picks
/// the best of these by cross-validation (ties: smaller L+S, then smaller S).
SelectionOutcome vccross_ls(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan,
                            bool capL = false);

/// Cross-validates every candidate pair.
SelectionOutcome cross_ls(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan,
                          bool capL = false);

/// Forward selection of discretization points by cross-validation.
SelectionOutcome cross_dhb(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan);

}  // namespace fdd
