#pragma once

#include <vector>

#include "fastdd/fdata.hpp"
#include "fastdd/stats.hpp"

namespace fdd {

/// Numbers of equal subintervals of [0, T] for level integrals (L) and slope
/// integrals (S).
struct LSConfig {
  int L = 0;
  int S = 0;

  int dim() const noexcept { return L + S; }
  /// Throws InvalidConfig unless L, S >= 0 and L + S >= 1.
  void validate() const;
  friend bool operator==(const LSConfig&, const LSConfig&) = default;
};

struct LSVector {
  Vector coords;
  LSConfig config;
};

/// Location-slope embedding: integrals of g over the L subintervals of
/// [0, T], then integrals of g' over the S subintervals.
LSVector ls_transform(const InterpolatedFunction& g, LSConfig cfg, double domainEnd);

/// Embeds every observation of `data`; one row per observation.
Matrix ls_transform(const FunctionalDataset& data, LSConfig cfg);

/// Affine projection onto the leading principal components of a sample.
class PcaMap {
 public:
  PcaMap(Vector center, Matrix basis);

  const Vector& center() const noexcept { return center_; }
  /// Orthonormal columns, one per retained component.
  const Matrix& basis() const noexcept { return basis_; }
  int retained() const noexcept { return static_cast<int>(basis_.cols()); }
  int ambient_dim() const noexcept { return static_cast<int>(basis_.rows()); }

  Vector project(const Vector& y) const;
  Matrix project(const Matrix& points) const;
  /// Adjoint map back into the ambient space.
  Vector reconstruct(const Vector& z) const;

 private:
  Vector center_;
  Matrix basis_;
};

/// Keeps the components whose covariance eigenvalue exceeds eigTol times the
/// largest one. Throws DegenerateData when nothing survives.
PcaMap fit_pca_fallback(const Matrix& points, double eigTol = 1e-10);
PcaMap fit_pca_fallback(const std::vector<LSVector>& points, double eigTol = 1e-10);

/// Whether the pooled covariance of `points` is too ill-conditioned to
/// invert (condition number above 1e12 or failed Cholesky).
bool needs_pca_fallback(const Matrix& points);

}  // namespace fdd
