#include "fastdd/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "fastdd/error.hpp"
#include "fastdd/knn.hpp"

namespace fdd {

GaussianClassModel fit_gaussian_classes(const Matrix& points, std::span<const Label> labels) {
  auto [c0, c1] = split_by_class(points, labels);
  if (c0.rows() < 2 || c1.rows() < 2) throw InvalidInput("each class needs at least two observations");
  GaussianClassModel g;
  const double n = static_cast<double>(points.rows());
  g.mean = {column_mean(c0), column_mean(c1)};
  g.cov = {sample_covariance(c0), sample_covariance(c1)};
  g.prior = {static_cast<double>(c0.rows()) / n, static_cast<double>(c1.rows()) / n};
  g.pooled = (static_cast<double>(c0.rows() - 1) * g.cov[0] + static_cast<double>(c1.rows() - 1) * g.cov[1]) / (n - 2.0);
  return g;
}

DiscriminantModel::DiscriminantModel(GaussianClassModel moments, bool shared)
    : moments_(std::move(moments)), shared_(shared) {
  if (shared_) {
    factor_[0].emplace(moments_.pooled);
    factor_[1] = factor_[0];
  } else {
    factor_[0].emplace(moments_.cov[0]);
    factor_[1].emplace(moments_.cov[1]);
  }
}

double DiscriminantModel::score(const Vector& y, Label c) const {
  const auto& f = *factor_[static_cast<std::size_t>(c)];
  const Vector diff = y - moments_.mean[static_cast<std::size_t>(c)];
  return std::log(moments_.prior[static_cast<std::size_t>(c)]) - 0.5 * f.quadratic_form(diff) - 0.5 * f.log_det();
}

Label DiscriminantModel::classify(const Vector& y) const { return score(y, 1) > score(y, 0) ? 1 : 0; }

DiscriminantModel fit_lda(const Matrix& points, std::span<const Label> labels) {
  return DiscriminantModel(fit_gaussian_classes(points, labels), true);
}

DiscriminantModel fit_qda(const Matrix& points, std::span<const Label> labels, bool equalCovariance) {
  return DiscriminantModel(fit_gaussian_classes(points, labels), equalCovariance);
}

double lda_training_error(const Matrix& points, std::span<const Label> labels) {
  const DiscriminantModel m = fit_lda(points, labels);
  int errors = 0;
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    errors += m.classify(points.row(i).transpose()) != labels[static_cast<std::size_t>(i)];
  return static_cast<double>(errors) / static_cast<double>(points.rows());
}

AffineKnnModel::AffineKnnModel(Matrix training, std::vector<Label> labels, Matrix whitening, int k)
    : training_(std::move(training)), labels_(std::move(labels)), whitening_(std::move(whitening)), k_(k) {
  if (static_cast<std::size_t>(training_.rows()) != labels_.size()) throw InvalidInput("kNN: points and labels differ");
  if (k_ < 1 || k_ > training_.rows()) throw InvalidInput("kNN: k out of range");
  whitened_ = training_ * whitening_;  // whitening is symmetric
}

Label AffineKnnModel::classify(const Vector& y) const {
  const Vector w = whitening_ * y;
  std::vector<double> dist(labels_.size());
  for (Eigen::Index i = 0; i < whitened_.rows(); ++i)
    dist[static_cast<std::size_t>(i)] = (whitened_.row(i).transpose() - w).norm();
  return knn_vote(dist, labels_, k_, kMahalanobisTieTolerance);
}

int affine_knn_k_max(std::size_t n, int dim) {
  const auto nn = static_cast<double>(n);
  const double grid = std::floor(10.0 * std::pow(nn, 1.0 / static_cast<double>(dim)) + 1.0);
  const int bound = static_cast<int>(std::min(grid, nn - 1.0));
  return std::min(std::max(bound, 2), static_cast<int>(n) - 1);
}

namespace {

Matrix pooled_whitening(const Matrix& points) {
  if (points.rows() < 2) throw InvalidInput("kNN needs at least two observations");
  return SymmetricFactor(sample_covariance(points)).inverse_sqrt();
}

}  // namespace

AffineKnnModel fit_affine_knn(const Matrix& points, std::span<const Label> labels) {
  split_by_class(points, labels);  // validates labels
  Matrix w = pooled_whitening(points);
  const Matrix z = points * w;
  const auto n = z.rows();
  Matrix dist(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    dist(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) dist(i, j) = dist(j, i) = (z.row(i) - z.row(j)).norm();
  }
  const int kMax = affine_knn_k_max(static_cast<std::size_t>(n), static_cast<int>(points.cols()));
  const int k = argmin_k(knn_loo_errors(dist, labels, kMax, kMahalanobisTieTolerance));
  return AffineKnnModel(points, std::vector<Label>(labels.begin(), labels.end()), std::move(w), k);
}

AffineKnnModel fit_affine_knn(const Matrix& points, std::span<const Label> labels, int k) {
  split_by_class(points, labels);
  return AffineKnnModel(points, std::vector<Label>(labels.begin(), labels.end()), pooled_whitening(points), k);
}

MaxDepthModel::MaxDepthModel(DDMap map, std::array<double, 2> prior) : map_(std::move(map)), prior_(prior) {}

Label MaxDepthModel::classify(const Vector& y) const {
  const DDPoint z = map_(y);
  return prior_[1] * z.z1 > prior_[0] * z.z0 ? 1 : 0;
}

MaxDepthModel fit_maxdepth(const Matrix& points, std::span<const Label> labels, DepthKind kind, std::uint64_t seed,
                           int nDirections) {
  auto [c0, c1] = split_by_class(points, labels);
  if (c0.rows() == 0 || c1.rows() == 0) throw InvalidInput("maximum-depth classifier needs both classes");
  const double n = static_cast<double>(points.rows());
  std::array<double, 2> prior{static_cast<double>(c0.rows()) / n, static_cast<double>(c1.rows()) / n};
  return MaxDepthModel(fit_dd_map(c0, c1, kind, seed, nDirections), prior);
}

}  // namespace fdd
