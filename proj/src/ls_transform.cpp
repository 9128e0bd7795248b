#include "fastdd/ls_transform.hpp"

#include "fastdd/error.hpp"

namespace fdd {

void LSConfig::validate() const {
  if (L < 0 || S < 0) throw InvalidConfig("L and S must be nonnegative");
  if (L + S < 1) throw InvalidConfig("L + S must be at least 1");
}

LSVector ls_transform(const InterpolatedFunction& g, LSConfig cfg, double domainEnd) {
  cfg.validate();
  if (!(domainEnd > 0.0)) throw InvalidInput("domain end must be positive");
  LSVector out{Vector(cfg.dim()), cfg};
  for (int l = 0; l < cfg.L; ++l) {
    const double a = domainEnd * l / cfg.L;
    const double b = (l + 1 == cfg.L) ? domainEnd : domainEnd * (l + 1) / cfg.L;
    out.coords[l] = integrate_level(g, a, b);
  }
  for (int s = 0; s < cfg.S; ++s) {
    const double a = domainEnd * s / cfg.S;
    const double b = (s + 1 == cfg.S) ? domainEnd : domainEnd * (s + 1) / cfg.S;
    out.coords[cfg.L + s] = integrate_slope(g, a, b);
  }
  return out;
}

Matrix ls_transform(const FunctionalDataset& data, LSConfig cfg) {
  cfg.validate();
  Matrix out(static_cast<Eigen::Index>(data.size()), cfg.dim());
  for (std::size_t i = 0; i < data.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = ls_transform(data.interpolants()[i], cfg, data.domain_end()).coords;
  return out;
}

PcaMap::PcaMap(Vector center, Matrix basis) : center_(std::move(center)), basis_(std::move(basis)) {
  if (basis_.rows() != center_.size() || basis_.cols() < 1)
    throw InvalidInput("PCA map: basis does not match center");
}

Vector PcaMap::project(const Vector& y) const { return basis_.transpose() * (y - center_); }

Matrix PcaMap::project(const Matrix& points) const {
  return (points.rowwise() - center_.transpose()) * basis_;
}

Vector PcaMap::reconstruct(const Vector& z) const { return center_ + basis_ * z; }

PcaMap fit_pca_fallback(const Matrix& points, double eigTol) {
  if (points.rows() < 2) throw InvalidInput("PCA needs at least two points");
  const Matrix cov = sample_covariance(points);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  const Vector& lambda = eig.eigenvalues();  // ascending
  const double maxEig = lambda.maxCoeff();
  if (!(maxEig > 0.0)) throw DegenerateData("all principal variances vanish");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = lambda.size() - 1; j >= 0; --j)
    if (lambda[j] > eigTol * maxEig) keep.push_back(j);
  Matrix basis(points.cols(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(keep[c]);
  return PcaMap(column_mean(points), std::move(basis));
}

PcaMap fit_pca_fallback(const std::vector<LSVector>& points, double eigTol) {
  if (points.empty()) throw InvalidInput("PCA needs at least two points");
  Matrix m(static_cast<Eigen::Index>(points.size()), points.front().coords.size());
  for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = points[i].coords;
  return fit_pca_fallback(m, eigTol);
}

bool needs_pca_fallback(const Matrix& points) {
  if (points.rows() < 2) return true;
  return is_numerically_singular(sample_covariance(points));
}

}  // namespace fdd
