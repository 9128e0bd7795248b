#include "fastdd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fastdd/error.hpp"

namespace fdd {

Vector column_mean(const Matrix& points) {
  if (points.rows() == 0) throw InvalidInput("mean of an empty sample");
  return points.colwise().mean().transpose();
}

Matrix sample_covariance(const Matrix& points) {
  const Eigen::Index n = points.rows();
  if (n == 0) throw InvalidInput("covariance of an empty sample");
  if (n == 1) return Matrix::Zero(points.cols(), points.cols());
  const Matrix centered = points.rowwise() - points.colwise().mean();
  Matrix cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
  return 0.5 * (cov + cov.transpose());
}

double median_inplace(std::span<double> values) {
  if (values.empty()) throw InvalidInput("median of an empty sample");
  const std::size_t n = values.size();
  const std::size_t mid = n / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double median(std::vector<double> values) { return median_inplace(values); }

double mad(std::span<const double> values, double center) {
  std::vector<double> dev(values.size());
  std::transform(values.begin(), values.end(), dev.begin(), [center](double v) { return std::abs(v - center); });
  return median_inplace(dev);
}

SymmetricFactor::SymmetricFactor(const Matrix& scatter, double relFloor) {
  if (scatter.rows() != scatter.cols() || scatter.rows() == 0)
    throw InvalidInput("scatter matrix must be square and nonempty");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(scatter);
  if (eig.info() != Eigen::Success) throw SingularScatter("eigendecomposition of scatter failed");
  const Vector& lambda = eig.eigenvalues();
  const double maxEig = lambda.maxCoeff();
  if (!(maxEig > 0.0) || !(lambda.minCoeff() > relFloor * maxEig))
    throw SingularScatter("scatter matrix is singular or numerically rank deficient");
  const Matrix& q = eig.eigenvectors();
  inverse_ = q * lambda.cwiseInverse().asDiagonal() * q.transpose();
  inverseSqrt_ = q * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
  logDet_ = lambda.array().log().sum();
}

double SymmetricFactor::quadratic_form(const Vector& diff) const { return diff.dot(inverse_ * diff); }

double condition_number(const Matrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetric, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

bool is_numerically_singular(const Matrix& cov, double maxCondition) {
  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success) return true;
  return condition_number(cov) > maxCondition;
}

}  // namespace fdd
