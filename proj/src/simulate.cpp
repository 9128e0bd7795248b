#include "fastdd/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fastdd/error.hpp"
#include "fastdd/seed.hpp"

namespace fdd {

std::vector<double> OUNoiseSpec::grid() const {
  if (gridSize < 2) throw InvalidConfig("noise grid needs at least two points");
  std::vector<double> t(static_cast<std::size_t>(gridSize));
  for (int j = 0; j < gridSize; ++j) t[static_cast<std::size_t>(j)] = static_cast<double>(j) / (gridSize - 1);
  return t;
}

Matrix OUNoiseSpec::covariance() const {
  const std::vector<double> t = grid();
  Matrix c(gridSize, gridSize);
  for (int i = 0; i < gridSize; ++i)
    for (int j = 0; j < gridSize; ++j)
      c(i, j) = variance * std::exp(-lengthScaleInv * std::abs(t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)]));
  return c;
}

Matrix sample_noise(const OUNoiseSpec& spec, int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("need at least one noise path");
  if (!(spec.variance > 0.0) || !(spec.lengthScaleInv > 0.0)) throw InvalidConfig("noise parameters must be positive");
  const Eigen::LLT<Matrix> llt(spec.covariance());
  if (llt.info() != Eigen::Success) throw SingularScatter("noise covariance is not positive definite");
  const Matrix lower = llt.matrixL();
  Matrix out(n, spec.gridSize);
  for (int i = 0; i < n; ++i) {
    std::mt19937_64 rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    std::normal_distribution<double> normal;
    Vector z(spec.gridSize);
    for (int j = 0; j < spec.gridSize; ++j) z(j) = normal(rng);
    out.row(i) = (lower * z).transpose();
  }
  return out;
}

double model1_mean(Label cls, double t) {
  return cls == 0 ? 30.0 * (1.0 - t) * std::pow(t, 1.2) : 30.0 * std::pow(1.0 - t, 1.2) * t;
}

double model2_mean(double t) { return 30.0 * (1.0 - t) * t * t + 0.5 * std::abs(std::sin(20.0 * std::numbers::pi * t)); }

Matrix bspline_basis(const std::vector<double>& t, int interiorKnots, int degree) {
  if (interiorKnots < 0 || degree < 0) throw InvalidConfig("spline needs non-negative knots and degree");
  std::vector<double> knots;
  for (int i = 0; i <= degree; ++i) knots.push_back(0.0);
  for (int i = 1; i <= interiorKnots; ++i) knots.push_back(static_cast<double>(i) / (interiorKnots + 1));
  for (int i = 0; i <= degree; ++i) knots.push_back(1.0);
  const int nBasis = interiorKnots + degree + 1;

  Matrix b = Matrix::Zero(static_cast<Eigen::Index>(t.size()), nBasis);
  for (std::size_t r = 0; r < t.size(); ++r) {
    const double x = t[r];
    // Degree-0 indicators; the right end belongs to the last nonempty span.
    std::vector<double> n(knots.size() - 1, 0.0);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      const bool inside = knots[i] <= x && x < knots[i + 1];
      const bool rightEnd = x == knots.back() && knots[i] < knots[i + 1] && knots[i + 1] == knots.back();
      n[i] = inside || rightEnd ? 1.0 : 0.0;
    }
    for (int p = 1; p <= degree; ++p) {
      for (std::size_t i = 0; i + p + 1 < knots.size(); ++i) {
        double v = 0.0;
        const double d1 = knots[i + p] - knots[i];
        const double d2 = knots[i + p + 1] - knots[i + 1];
        if (d1 > 0.0) v += (x - knots[i]) / d1 * n[i];
        if (d2 > 0.0) v += (knots[i + p + 1] - x) / d2 * n[i + 1];
        n[i] = v;
      }
    }
    for (int j = 0; j < nBasis; ++j) b(static_cast<Eigen::Index>(r), j) = n[static_cast<std::size_t>(j)];
  }
  return b;
}

SplineSmoother::SplineSmoother(const std::vector<double>& t, int interiorKnots, int degree)
    : basis_(bspline_basis(t, interiorKnots, degree)), qr_(basis_) {
  if (qr_.rank() < basis_.cols()) throw DegenerateData("too few points for the spline basis");
}

Vector SplineSmoother::fit(const Vector& values) const { return basis_ * qr_.solve(values); }

namespace {

FunctionalDataset assemble(const std::vector<double>& grid, const Matrix& paths, int nPerClass) {
  std::vector<DiscretizedFunction> obs;
  std::vector<std::string> ids;
  for (Eigen::Index i = 0; i < paths.rows(); ++i) {
    const Label cls = i < nPerClass ? 0 : 1;
    DiscretizedFunction f{grid, std::vector<double>(paths.cols()), cls};
    for (Eigen::Index j = 0; j < paths.cols(); ++j) f.values[static_cast<std::size_t>(j)] = paths(i, j);
    obs.push_back(std::move(f));
    ids.push_back("c" + std::to_string(cls) + "_" + std::to_string(cls == 0 ? i : i - nPerClass));
  }
  return FunctionalDataset::from_observations(std::move(obs), std::move(ids));
}

}  // namespace

FunctionalDataset model1(int nPerClass, std::uint64_t seed, const OUNoiseSpec& noise) {
  if (nPerClass < 1) throw InvalidInput("need at least one curve per class");
  const std::vector<double> grid = noise.grid();
  Matrix paths = sample_noise(noise, 2 * nPerClass, seed);
  for (Eigen::Index i = 0; i < paths.rows(); ++i)
    for (Eigen::Index j = 0; j < paths.cols(); ++j) paths(i, j) += model1_mean(i < nPerClass ? 0 : 1, grid[static_cast<std::size_t>(j)]);
  return assemble(grid, paths, nPerClass);
}

FunctionalDataset model2(int nPerClass, std::uint64_t seed, const OUNoiseSpec& noise) {
  if (nPerClass < 1) throw InvalidInput("need at least one curve per class");
  const std::vector<double> grid = noise.grid();
  Matrix paths = sample_noise(noise, 2 * nPerClass, seed);
  for (Eigen::Index i = 0; i < paths.rows(); ++i)
    for (Eigen::Index j = 0; j < paths.cols(); ++j) paths(i, j) += model2_mean(grid[static_cast<std::size_t>(j)]);
  const SplineSmoother smoother(grid, 8);
  for (Eigen::Index i = nPerClass; i < paths.rows(); ++i) paths.row(i) = smoother.fit(paths.row(i).transpose()).transpose();
  return assemble(grid, paths, nPerClass);
}

}  // namespace fdd
