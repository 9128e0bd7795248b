#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace fdd {

/// Data matrices hold one observation per row.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

Vector column_mean(const Matrix& points);

/// Sample covariance with denominator n - 1 (zero matrix for n == 1).
Matrix sample_covariance(const Matrix& points);

/// Median; the mean of the two central order statistics for even sizes.
/// Reorders `values`.
double median_inplace(std::span<double> values);
double median(std::vector<double> values);

/// Median absolute deviation from `center`, no consistency constant.
double mad(std::span<const double> values, double center);

/// Eigendecomposition of a symmetric positive-definite matrix with the
/// derived quantities the depths and discriminants need.
class SymmetricFactor {
 public:
  /// Throws SingularScatter if an eigenvalue is not positive or the smallest
  /// falls below `relFloor` times the largest.
  explicit SymmetricFactor(const Matrix& scatter, double relFloor = 1e-12);

  const Matrix& inverse() const noexcept { return inverse_; }
  const Matrix& inverse_sqrt() const noexcept { return inverseSqrt_; }
  double log_det() const noexcept { return logDet_; }
  /// (y - center)' S^{-1} (y - center)
  double quadratic_form(const Vector& diff) const;

 private:
  Matrix inverse_;
  Matrix inverseSqrt_;
  double logDet_ = 0.0;
};

/// Ratio of largest to smallest eigenvalue; +inf when not positive definite.
double condition_number(const Matrix& symmetric);

/// True when `cov` cannot be used as a scatter matrix: Cholesky fails or the
/// condition number exceeds `maxCondition`.
bool is_numerically_singular(const Matrix& cov, double maxCondition = 1e12);

}  // namespace fdd
