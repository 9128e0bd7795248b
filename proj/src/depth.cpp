#include "fastdd/depth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fastdd/error.hpp"

namespace fdd {

std::string_view to_string(DepthKind kind) {
  switch (kind) {
    case DepthKind::Mahalanobis: return "mahalanobis";
    case DepthKind::Spatial: return "spatial";
    case DepthKind::Projection: return "projection";
  }
  return "unknown";
}

DepthKind parse_depth_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "mahalanobis" || s == "m" || s == "mah") return DepthKind::Mahalanobis;
  if (s == "spatial" || s == "s" || s == "spt") return DepthKind::Spatial;
  if (s == "projection" || s == "p" || s == "prj") return DepthKind::Projection;
  throw InvalidConfig("unknown depth kind '" + s + "'");
}

Matrix random_directions(int dim, int nDirections, std::uint64_t seed) {
  if (dim < 1 || nDirections < 1) throw InvalidConfig("directions need positive dimension and count");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix dirs(nDirections, dim);
  for (int j = 0; j < nDirections; ++j) {
    double norm = 0.0;
    do {
      for (int c = 0; c < dim; ++c) dirs(j, c) = normal(rng);
      norm = dirs.row(j).norm();
    } while (!(norm > 0.0));
    dirs.row(j) /= norm;
  }
  return dirs;
}

DepthModel fit_depth_with_directions(const Matrix& points, DepthKind kind, Matrix directions) {
  if (points.rows() < 1 || points.cols() < 1) throw InvalidInput("depth needs a nonempty sample");
  if (!points.allFinite()) throw InvalidInput("depth sample contains non-finite entries");
  DepthModel m;
  m.kind_ = kind;
  m.sample_ = points;
  m.mean_ = column_mean(points);
  m.scatter_ = sample_covariance(points);

  if (kind == DepthKind::Projection) {
    if (directions.cols() != points.cols() || directions.rows() < 1)
      throw InvalidInput("direction set does not match the sample dimension");
    m.directions_ = std::move(directions);
    const Matrix proj = points * m.directions_.transpose();  // n x nDir
    const Eigen::Index nDir = m.directions_.rows();
    m.dirMedian_.resize(nDir);
    m.dirMad_.resize(nDir);
    std::vector<double> column(static_cast<std::size_t>(proj.rows()));
    for (Eigen::Index j = 0; j < nDir; ++j) {
      for (Eigen::Index i = 0; i < proj.rows(); ++i) column[static_cast<std::size_t>(i)] = proj(i, j);
      const double med = median_inplace(column);
      m.dirMedian_[j] = med;
      m.dirMad_[j] = mad(column, med);
    }
    return m;
  }

  m.factor_.emplace(m.scatter_);
  if (kind == DepthKind::Spatial) m.whitenedSample_ = points * m.factor_->inverse_sqrt();
  return m;
}

DepthModel fit_depth(const Matrix& points, DepthKind kind, int nDirections, std::uint64_t seed) {
  Matrix dirs;
  if (kind == DepthKind::Projection) dirs = random_directions(static_cast<int>(points.cols()), nDirections, seed);
  return fit_depth_with_directions(points, kind, std::move(dirs));
}

namespace {

void check_query(const Vector& y, const DepthModel& model) {
  if (y.size() != model.dim()) throw InvalidInput("query dimension does not match the depth model");
}

}  // namespace

double mahalanobis_depth(const Vector& y, const DepthModel& model) {
  check_query(y, model);
  if (!model.factor_) throw InvalidInput("depth model has no inverted scatter");
  return 1.0 / (1.0 + model.factor_->quadratic_form(y - model.mean_));
}

double spatial_depth(const Vector& y, const DepthModel& model) {
  check_query(y, model);
  if (model.kind_ != DepthKind::Spatial) throw InvalidInput("model was not fitted for spatial depth");
  const Eigen::Index n = model.sample_.rows();
  const Vector wy = model.factor_->inverse_sqrt() * y;

  Matrix units(n, y.size());
  std::size_t zeros = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (model.sample_.row(i).transpose() == y) {
      units.row(i).setZero();
      ++zeros;
      continue;
    }
    const Vector w = wy - model.whitenedSample_.row(i).transpose();
    const double len = w.norm();
    if (len > 0.0) {
      units.row(i) = w.transpose() / len;
    } else {
      units.row(i).setZero();
      ++zeros;
    }
  }
  const Vector mean = units.colwise().mean().transpose();
  // 1 - |m|^2 = zeros/n + mean_i |v_i - m|^2, which stays accurate when the
  // unit vectors nearly align (queries far from the sample).
  const double spread = (units.rowwise() - mean.transpose()).rowwise().squaredNorm().mean();
  const double oneMinusSq = static_cast<double>(zeros) / static_cast<double>(n) + spread;
  return oneMinusSq / (1.0 + mean.norm());
}

double projection_depth(const Vector& y, const DepthModel& model) {
  check_query(y, model);
  if (model.kind_ != DepthKind::Projection) throw InvalidInput("model was not fitted for projection depth");
  const Vector proj = model.directions_ * y;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < proj.size(); ++j) {
    const double dev = std::abs(proj[j] - model.dirMedian_[j]);
    const double scale = model.dirMad_[j];
    if (scale > 0.0) {
      worst = std::max(worst, dev / scale);
    } else if (dev > 0.0) {
      return 0.0;
    }
  }
  return 1.0 / (1.0 + worst);
}

double DepthModel::depth(const Vector& y) const {
  switch (kind_) {
    case DepthKind::Mahalanobis: return mahalanobis_depth(y, *this);
    case DepthKind::Spatial: return spatial_depth(y, *this);
    case DepthKind::Projection: return projection_depth(y, *this);
  }
  return 0.0;
}

}  // namespace fdd
