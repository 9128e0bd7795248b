#include "fastdd/ddplot.hpp"

#include <algorithm>
#include <cmath>

#include "fastdd/error.hpp"
#include "fastdd/knn.hpp"
#include "fastdd/seed.hpp"

namespace fdd {

DDMap::DDMap(DepthModel class0, DepthModel class1) : class0_(std::move(class0)), class1_(std::move(class1)) {
  if (class0_.kind() != class1_.kind() || class0_.dim() != class1_.dim())
    throw InvalidInput("DD map: class depth models disagree in kind or dimension");
}

DDPoint DDMap::operator()(const Vector& y) const { return DDPoint{class0_.depth(y), class1_.depth(y), {}}; }

std::vector<DDPoint> DDMap::map(const Matrix& points) const {
  std::vector<DDPoint> out;
  out.reserve(static_cast<std::size_t>(points.rows()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) out.push_back((*this)(points.row(i).transpose()));
  return out;
}

DDMap fit_dd_map(const Matrix& train0, const Matrix& train1, DepthKind kind, std::uint64_t seed, int nDirections) {
  if (train0.rows() == 0 || train1.rows() == 0) throw InvalidInput("DD-plot needs both classes");
  return DDMap(fit_depth(train0, kind, nDirections, derive_seed(seed, {0})),
               fit_depth(train1, kind, nDirections, derive_seed(seed, {1})));
}

DDTransform dd_transform(const Matrix& train0, const Matrix& train1, const Matrix& query, DepthKind kind,
                         std::uint64_t seed, int nDirections) {
  const DDMap map = fit_dd_map(train0, train1, kind, seed, nDirections);
  DDTransform out;
  out.training = map.map(train0);
  for (auto& z : out.training) z.label = 0;
  for (DDPoint z : map.map(train1)) {
    z.label = 1;
    out.training.push_back(z);
  }
  if (query.rows() > 0) out.query = map.map(query);
  return out;
}

std::pair<Matrix, Matrix> split_by_class(const Matrix& points, std::span<const Label> labels) {
  if (static_cast<std::size_t>(points.rows()) != labels.size())
    throw InvalidInput("points and labels differ in length");
  const auto n1 = static_cast<Eigen::Index>(std::count(labels.begin(), labels.end(), 1));
  Matrix c0(points.rows() - n1, points.cols());
  Matrix c1(n1, points.cols());
  Eigen::Index i0 = 0, i1 = 0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const Label y = labels[static_cast<std::size_t>(i)];
    if (y != 0 && y != 1) throw InvalidInput("class label must be 0 or 1");
    if (y == 1) {
      c1.row(i1++) = points.row(i);
    } else {
      c0.row(i0++) = points.row(i);
    }
  }
  return {std::move(c0), std::move(c1)};
}

int ddknn_k_max(std::size_t n) {
  const auto nn = static_cast<double>(n);
  const int bound = static_cast<int>(std::min(std::floor(10.0 * std::sqrt(nn) + 1.0), std::floor(nn / 2.0)));
  return std::min(std::max(bound, 2), static_cast<int>(n) - 1);
}

namespace {

void check_training(const std::vector<DDPoint>& training) {
  std::size_t n0 = 0, n1 = 0;
  for (const auto& z : training) {
    if (!z.label) throw InvalidInput("DD-kNN training points must be labeled");
    (*z.label == 1 ? n1 : n0)++;
  }
  if (n0 < 2 || n1 < 2) throw InvalidInput("DD-kNN needs at least two points per class");
}

}  // namespace

DDkNNModel fit_ddknn(std::vector<DDPoint> training) {
  check_training(training);
  const int kMax = ddknn_k_max(training.size());
  return fit_ddknn(std::move(training), kMax);
}

DDkNNModel fit_ddknn(std::vector<DDPoint> training, int kMax) {
  check_training(training);
  const auto n = static_cast<Eigen::Index>(training.size());
  Matrix dist(n, n);
  std::vector<Label> labels(training.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = *training[static_cast<std::size_t>(i)].label;
    dist(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j)
      dist(i, j) = dist(j, i) = linf_distance(training[static_cast<std::size_t>(i)], training[static_cast<std::size_t>(j)]);
  }
  const std::vector<int> errors = knn_loo_errors(dist, labels, std::min<int>(kMax, static_cast<int>(n) - 1));
  return DDkNNModel{std::move(training), argmin_k(errors)};
}

Label classify_ddknn(const DDkNNModel& model, const DDPoint& z) {
  std::vector<double> dist(model.training.size());
  std::vector<Label> labels(model.training.size());
  for (std::size_t i = 0; i < model.training.size(); ++i) {
    dist[i] = linf_distance(z, model.training[i]);
    labels[i] = *model.training[i].label;
  }
  return knn_vote(dist, labels, model.k);
}

}  // namespace fdd
