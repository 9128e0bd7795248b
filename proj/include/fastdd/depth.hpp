#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fastdd/stats.hpp"

namespace fdd {

enum class DepthKind { Mahalanobis, Spatial, Projection };

std::string_view to_string(DepthKind kind);
/// Accepts "mahalanobis", "spatial", "projection" (or M/S/P).
DepthKind parse_depth_kind(std::string_view name);

inline constexpr int kDefaultDirections = 1000;

/// Everything needed to evaluate a depth w.r.t. a fitted sample.
///
/// Location and scatter are the moment estimates of the sample. Mahalanobis
/// and spatial depth require the scatter to be invertible; projection depth
/// instead carries a set of unit directions with the median and MAD of the
/// projected sample along each.
class DepthModel {
 public:
  DepthKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return static_cast<int>(mean_.size()); }
  std::size_t sample_size() const noexcept { return static_cast<std::size_t>(sample_.rows()); }

  const Vector& mean() const noexcept { return mean_; }
  const Matrix& scatter() const noexcept { return scatter_; }
  const Matrix& sample() const noexcept { return sample_; }
  /// One unit direction per row; empty unless kind() == Projection.
  const Matrix& directions() const noexcept { return directions_; }
  const Vector& direction_medians() const noexcept { return dirMedian_; }
  const Vector& direction_mads() const noexcept { return dirMad_; }

  /// Depth of y under this model's kind.
  double depth(const Vector& y) const;

 private:
  friend DepthModel fit_depth_with_directions(const Matrix&, DepthKind, Matrix);
  friend double mahalanobis_depth(const Vector&, const DepthModel&);
  friend double spatial_depth(const Vector&, const DepthModel&);
  friend double projection_depth(const Vector&, const DepthModel&);

  DepthKind kind_ = DepthKind::Mahalanobis;
  Vector mean_;
  Matrix scatter_;
  Matrix sample_;
  std::optional<SymmetricFactor> factor_;
  Matrix whitenedSample_;  // rows: Sigma^{-1/2} y_i
  Matrix directions_;
  Vector dirMedian_;
  Vector dirMad_;
};

/// `nDirections` unit vectors, uniform on the sphere in R^dim. Direction j
/// only depends on (dim, seed, j), so larger requests extend smaller ones.
Matrix random_directions(int dim, int nDirections, std::uint64_t seed);

/// Moment estimates; for Projection additionally draws the directions from
/// `seed`. Throws SingularScatter for Mahalanobis/Spatial when the sample
/// covariance is (numerically) singular.
DepthModel fit_depth(const Matrix& points, DepthKind kind, int nDirections = kDefaultDirections,
                     std::uint64_t seed = 0);

/// Same as fit_depth but with a caller-supplied direction set (used when a
/// persisted model is restored). `directions` is ignored unless Projection.
DepthModel fit_depth_with_directions(const Matrix& points, DepthKind kind, Matrix directions);

double mahalanobis_depth(const Vector& y, const DepthModel& model);
double spatial_depth(const Vector& y, const DepthModel& model);
double projection_depth(const Vector& y, const DepthModel& model);

}  // namespace fdd
