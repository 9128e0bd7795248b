#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fastdd/fdata.hpp"
#include "fastdd/stats.hpp"

namespace fdd::testing {

inline Matrix gaussian_cloud(int n, const Vector& mean, const Matrix& chol, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix out(n, mean.size());
  for (int i = 0; i < n; ++i) {
    Vector z(mean.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = normal(rng);
    out.row(i) = (mean + chol * z).transpose();
  }
  return out;
}

inline Matrix standard_cloud(int n, int d, std::mt19937_64& rng, double shift = 0.0) {
  return gaussian_cloud(n, Vector::Constant(d, shift), Matrix::Identity(d, d), rng);
}

inline Matrix random_invertible(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a(i, j) = u(rng);
    Eigen::JacobiSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) > 0.2 && s(0) / s(s.size() - 1) < 20.0) return a;
  }
}

/// Random curve on [0, 1] with `k` strictly increasing knots inside.
inline DiscretizedFunction random_curve(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> normal;
  std::vector<double> t(static_cast<std::size_t>(k));
  for (auto& x : t) x = u(rng);
  std::sort(t.begin(), t.end());
  DiscretizedFunction f;
  f.times = t;
  for (int i = 0; i < k; ++i) f.values.push_back(normal(rng));
  return f;
}

inline std::vector<Label> two_class_labels(int n0, int n1) {
  std::vector<Label> y(static_cast<std::size_t>(n0), 0);
  y.insert(y.end(), static_cast<std::size_t>(n1), 1);
  return y;
}

inline Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

}  // namespace fdd::testing
