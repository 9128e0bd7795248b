#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fastdd/depth.hpp"
#include "fastdd/fdata.hpp"

namespace fdd {

/// Depths of one point w.r.t. training class 0 and class 1.
struct DDPoint {
  double z0 = 0.0;
  double z1 = 0.0;
  std::optional<Label> label;
};

/// The pair of fitted class depth models that maps points onto the DD-plot.
class DDMap {
 public:
  DDMap(DepthModel class0, DepthModel class1);

  DDPoint operator()(const Vector& y) const;
  std::vector<DDPoint> map(const Matrix& points) const;

  const DepthModel& class0() const noexcept { return class0_; }
  const DepthModel& class1() const noexcept { return class1_; }
  DepthKind kind() const noexcept { return class0_.kind(); }

 private:
  DepthModel class0_;
  DepthModel class1_;
};

/// Fits one depth model per class. Projection directions for class c are
/// drawn from a seed derived from (`seed`, c).
DDMap fit_dd_map(const Matrix& train0, const Matrix& train1, DepthKind kind, std::uint64_t seed,
                 int nDirections = kDefaultDirections);

struct DDTransform {
  std::vector<DDPoint> training;  // class 0 rows first, then class 1, labeled
  std::vector<DDPoint> query;     // unlabeled
};

/// DD-plot of the training classes and of additional query points.
DDTransform dd_transform(const Matrix& train0, const Matrix& train1, const Matrix& query, DepthKind kind,
                         std::uint64_t seed, int nDirections = kDefaultDirections);

/// Splits a labeled sample by class.
std::pair<Matrix, Matrix> split_by_class(const Matrix& points, std::span<const Label> labels);

// ---------------------------------------------------------------------------
// kNN on the DD-plot (L-infinity distance).

struct DDkNNModel {
  std::vector<DDPoint> training;
  int k = 1;
};

/// Upper end of the k grid for N training points:
/// max(min(floor(10 sqrt(N) + 1), floor(N / 2)), 2), capped at N - 1.
int ddknn_k_max(std::size_t n);

/// Chooses k by leave-one-out over 1..ddknn_k_max(N); smallest k wins ties.
/// Throws InvalidInput unless every class has at least two points.
DDkNNModel fit_ddknn(std::vector<DDPoint> training);
/// Same, with an explicit upper end of the k grid.
DDkNNModel fit_ddknn(std::vector<DDPoint> training, int kMax);

Label classify_ddknn(const DDkNNModel& model, const DDPoint& z);

inline double linf_distance(const DDPoint& a, const DDPoint& b) {
  const double dx = a.z0 > b.z0 ? a.z0 - b.z0 : b.z0 - a.z0;
  const double dy = a.z1 > b.z1 ? a.z1 - b.z1 : b.z1 - a.z1;
  return dx > dy ? dx : dy;
}

}  // namespace fdd
