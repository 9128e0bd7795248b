#pragma once

#include <cstdint>
#include <vector>

#include "fastdd/fdata.hpp"
#include "fastdd/stats.hpp"

namespace fdd {

/// Zero-mean Gaussian process with Cov[u(s), u(t)] = variance * exp(-rate |s - t|)
/// observed on an equidistant grid over [0, 1].
struct OUNoiseSpec {
  double variance = 0.2;
  double lengthScaleInv = 1.0 / 0.3;
  int gridSize = 51;

  std::vector<double> grid() const;
  Matrix covariance() const;
};

/// n paths, one per row. Row i only depends on (seed, i).
Matrix sample_noise(const OUNoiseSpec& spec, int n, std::uint64_t seed);

double model1_mean(Label cls, double t);
/// Deterministic part of the class-0 curves of the second model.
double model2_mean(double t);

/// Cubic B-spline basis with `interiorKnots` equidistant interior knots on
/// [0, 1], evaluated at `t`; one row per point, interiorKnots + 4 columns.
Matrix bspline_basis(const std::vector<double>& t, int interiorKnots, int degree = 3);

/// Least-squares spline approximation of values observed at `t`, evaluated
/// back at `t`.
class SplineSmoother {
 public:
  SplineSmoother(const std::vector<double>& t, int interiorKnots, int degree = 3);
  Vector fit(const Vector& values) const;

 private:
  Matrix basis_;
  Eigen::ColPivHouseholderQR<Matrix> qr_;
};

/// Mean-shifted curves: class 0 has mean 30 (1-t) t^1.2, class 1
/// 30 (1-t)^1.2 t, both plus noise. Class 0 comes first.
FunctionalDataset model1(int nPerClass, std::uint64_t seed, const OUNoiseSpec& noise = {});

/// Class 0: 30 (1-t) t^2 + 0.5 |sin(20 pi t)| plus noise. Class 1: the
/// least-squares cubic spline with 8 interior knots fitted to an
/// independent class-0 path.
FunctionalDataset model2(int nPerClass, std::uint64_t seed, const OUNoiseSpec& noise = {});

}  // namespace fdd
