#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "fastdd/ddplot.hpp"
#include "fastdd/depth.hpp"
#include "fastdd/fdata.hpp"
#include "fastdd/stats.hpp"

namespace fdd {

/// Moment estimates of both classes. Priors are the class portions; the
/// pooled covariance uses the denominator n0 + n1 - 2.
struct GaussianClassModel {
  std::array<Vector, 2> mean;
  std::array<Matrix, 2> cov;
  std::array<double, 2> prior{};
  Matrix pooled;
};

/// Throws InvalidInput unless both classes are present with at least two
/// observations each.
GaussianClassModel fit_gaussian_classes(const Matrix& points, std::span<const Label> labels);

/// Gaussian discriminant rule: argmax over classes of log prior plus the
/// Gaussian log-density; label 0 on ties. LDA shares the pooled covariance
/// between the classes, QDA uses one per class.
class DiscriminantModel {
 public:
  DiscriminantModel(GaussianClassModel moments, bool shared);

  const GaussianClassModel& moments() const noexcept { return moments_; }
  bool shared_covariance() const noexcept { return shared_; }

  /// Log prior plus log-density up to a constant common to both classes.
  double score(const Vector& y, Label c) const;
  Label classify(const Vector& y) const;

 private:
  GaussianClassModel moments_;
  bool shared_;
  std::array<std::optional<SymmetricFactor>, 2> factor_;
};

DiscriminantModel fit_lda(const Matrix& points, std::span<const Label> labels);
/// `equalCovariance` replaces both class covariances by the pooled one.
DiscriminantModel fit_qda(const Matrix& points, std::span<const Label> labels, bool equalCovariance = false);

/// Training-sample misclassification fraction of LDA.
double lda_training_error(const Matrix& points, std::span<const Label> labels);

/// Whitened distances go through a matrix factorization, so exact ties (as
/// in n = d + 1 points, which whiten to a regular simplex) only survive up
/// to rounding. Distances this close relative to the k-th one are ties.
inline constexpr double kMahalanobisTieTolerance = 1e-10;

/// kNN with the Mahalanobis distance of the pooled sample covariance.
class AffineKnnModel {
 public:
  AffineKnnModel(Matrix training, std::vector<Label> labels, Matrix whitening, int k);

  int k() const noexcept { return k_; }
  const Matrix& training() const noexcept { return training_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  /// Sigma^{-1/2} of the pooled sample.
  const Matrix& whitening() const noexcept { return whitening_; }

  Label classify(const Vector& y) const;

 private:
  Matrix training_;
  Matrix whitened_;
  std::vector<Label> labels_;
  Matrix whitening_;
  int k_;
};

/// max(min(floor(10 N^{1/d} + 1), N - 1), 2), capped at N - 1.
int affine_knn_k_max(std::size_t n, int dim);

/// Chooses k by leave-one-out over 1..affine_knn_k_max (smallest k on ties).
AffineKnnModel fit_affine_knn(const Matrix& points, std::span<const Label> labels);
/// Same with a fixed k.
AffineKnnModel fit_affine_knn(const Matrix& points, std::span<const Label> labels, int k);

/// argmax over classes of prior times depth; label 0 on ties.
class MaxDepthModel {
 public:
  MaxDepthModel(DDMap map, std::array<double, 2> prior);

  const DDMap& map() const noexcept { return map_; }
  const std::array<double, 2>& prior() const noexcept { return prior_; }

  Label classify(const Vector& y) const;

 private:
  DDMap map_;
  std::array<double, 2> prior_;
};

MaxDepthModel fit_maxdepth(const Matrix& points, std::span<const Label> labels, DepthKind kind,
                           std::uint64_t seed = 0, int nDirections = kDefaultDirections);

}  // namespace fdd
