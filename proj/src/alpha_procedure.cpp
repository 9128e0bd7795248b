#include "fastdd/alpha_procedure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fastdd/cv.hpp"
#include "fastdd/error.hpp"

namespace fdd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

struct Event {
  double angle;
  std::size_t point;
  bool entering;
};

Label majority_label(std::span<const Label> labels) {
  const auto n1 = std::count(labels.begin(), labels.end(), 1);
  return 2 * n1 > static_cast<std::ptrdiff_t>(labels.size()) ? 1 : 0;
}

int count_errors(const Vector& score, std::span<const Label> labels, Label zeroLabel) {
  int errors = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double s = score(static_cast<Eigen::Index>(i));
    const Label predicted = s > 0.0 ? 1 : (s < 0.0 ? 0 : zeroLabel);
    errors += predicted != labels[i];
  }
  return errors;
}

double monomial_value(double z0, double z1, const Monomial& m) {
  return std::pow(z0, m.a) * std::pow(z1, m.b);
}

}  // namespace

std::vector<Monomial> monomials(int degree) {
  if (degree < 1) throw InvalidConfig("polynomial degree must be at least 1");
  std::vector<Monomial> out;
  for (int total = 1; total <= degree; ++total)
    for (int a = total; a >= 0; --a) out.push_back({a, total - a});
  return out;
}

Vector extend_features(const DDPoint& z, std::span<const Monomial> features) {
  Vector v(static_cast<Eigen::Index>(features.size()));
  for (std::size_t f = 0; f < features.size(); ++f) v(static_cast<Eigen::Index>(f)) = monomial_value(z.z0, z.z1, features[f]);
  return v;
}

Matrix extend_features(std::span<const DDPoint> points, std::span<const Monomial> features) {
  Matrix m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(features.size()));
  for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = extend_features(points[i], features).transpose();
  return m;
}

OriginLine best_origin_line(std::span<const double> x, std::span<const double> y, std::span<const Label> labels,
                            Label zeroLabel) {
  const std::size_t n = labels.size();
  if (x.size() != n || y.size() != n) throw InvalidInput("origin line: coordinate and label lengths differ");

  // A point at polar angle phi scores positive for normals in the open arc
  // (phi - pi/2, phi + pi/2); its prediction flips at the two ends.
  std::vector<Event> events;
  events.reserve(2 * n);
  std::vector<char> positive(n, 0);
  int errors = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0 && y[i] == 0.0) {
      errors += zeroLabel != labels[i];
      continue;
    }
    const double phi = std::atan2(y[i], x[i]);
    const double enter = wrap_angle(phi - std::numbers::pi / 2);
    const double leave = wrap_angle(phi + std::numbers::pi / 2);
    events.push_back({enter, i, true});
    events.push_back({leave, i, false});
    // Initial state: just before the first event, i.e. inside the arc that
    // wraps through angle 0.
    positive[i] = enter > leave;
    errors += (positive[i] ? 1 : 0) != labels[i];
  }
  if (events.empty()) return OriginLine{errors, 0.0, kTwoPi};

  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.angle < b.angle; });

  const double first = events.front().angle;
  const double last = events.back().angle;
  OriginLine best{errors, wrap_angle(0.5 * (last + first + kTwoPi)), first + kTwoPi - last};

  std::size_t g = 0;
  while (g < events.size()) {
    const double angle = events[g].angle;
    std::size_t end = g;
    for (; end < events.size() && events[end].angle == angle; ++end) {
      const Event& e = events[end];
      const bool was = positive[e.point] != 0;
      positive[e.point] = e.entering;
      if (was != e.entering) {
        const bool label1 = labels[e.point] == 1;
        errors += (e.entering == label1) ? -1 : 1;
      }
    }
    if (end == events.size()) break;  // the wrap arc was scored up front
    const double next = events[end].angle;
    const double width = next - angle;
    if (errors < best.errors || (errors == best.errors && width > best.width))
      best = OriginLine{errors, 0.5 * (angle + next), width};
    g = end;
  }
  return best;
}

AlphaSeparator alpha_procedure(const Matrix& features, std::span<const Label> labels) {
  const auto n = features.rows();
  const auto nf = features.cols();
  if (static_cast<std::size_t>(n) != labels.size()) throw InvalidInput("alpha-procedure: features and labels differ");
  if (nf < 1) throw InvalidInput("alpha-procedure needs at least one feature");

  AlphaSeparator out;
  out.zeroLabel = majority_label(labels);
  out.weights = Vector::Zero(nf);

  if (nf == 1) {
    out.weights(0) = 1.0;
    const int plus = count_errors(features.col(0), labels, out.zeroLabel);
    const int minus = count_errors(-features.col(0), labels, out.zeroLabel);
    if (minus < plus) out.weights(0) = -1.0;
    out.order = {0};
    out.errorPath = {std::min(plus, minus)};
    return out;
  }

  auto column = [&](const Vector& v) { return std::span<const double>(v.data(), static_cast<std::size_t>(v.size())); };
  std::vector<Vector> cols(static_cast<std::size_t>(nf));
  for (Eigen::Index f = 0; f < nf; ++f) cols[static_cast<std::size_t>(f)] = features.col(f);

  OriginLine best{std::numeric_limits<int>::max(), 0.0, -1.0};
  int bi = 0, bj = 1;
  for (Eigen::Index i = 0; i < nf; ++i) {
    for (Eigen::Index j = i + 1; j < nf; ++j) {
      const OriginLine line = best_origin_line(column(cols[static_cast<std::size_t>(i)]),
                                               column(cols[static_cast<std::size_t>(j)]), labels, out.zeroLabel);
      if (line.errors < best.errors || (line.errors == best.errors && line.width > best.width)) {
        best = line;
        bi = static_cast<int>(i);
        bj = static_cast<int>(j);
      }
    }
  }

  std::vector<char> used(static_cast<std::size_t>(nf), 0);
  used[static_cast<std::size_t>(bi)] = used[static_cast<std::size_t>(bj)] = 1;
  out.weights(bi) = std::cos(best.angle);
  out.weights(bj) = std::sin(best.angle);
  Vector combined = out.weights(bi) * cols[static_cast<std::size_t>(bi)] + out.weights(bj) * cols[static_cast<std::size_t>(bj)];
  int risk = best.errors;
  out.order = {bi, bj};
  out.errorPath = {risk};

  while (static_cast<Eigen::Index>(out.order.size()) < nf) {
    OriginLine step{std::numeric_limits<int>::max(), 0.0, -1.0};
    int pick = -1;
    for (Eigen::Index j = 0; j < nf; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const OriginLine line =
          best_origin_line(column(combined), column(cols[static_cast<std::size_t>(j)]), labels, out.zeroLabel);
      if (line.errors < step.errors || (line.errors == step.errors && line.width > step.width)) {
        step = line;
        pick = static_cast<int>(j);
      }
    }
    if (pick < 0 || step.errors >= risk) break;
    const double c = std::cos(step.angle);
    const double s = std::sin(step.angle);
    out.weights *= c;
    out.weights(pick) += s;
    combined = c * combined + s * cols[static_cast<std::size_t>(pick)];
    used[static_cast<std::size_t>(pick)] = 1;
    risk = step.errors;
    out.order.push_back(pick);
    out.errorPath.push_back(risk);
  }
  return out;
}

namespace {

std::vector<Label> dd_labels(std::span<const DDPoint> training) {
  std::vector<Label> labels;
  labels.reserve(training.size());
  for (const auto& z : training) {
    if (!z.label) throw InvalidInput("DD-alpha training points must be labeled");
    if (*z.label != 0 && *z.label != 1) throw InvalidInput("class label must be 0 or 1");
    labels.push_back(*z.label);
  }
  return labels;
}

}  // namespace

DDAlphaModel fit_ddalpha_degree(std::span<const DDPoint> training, int degree) {
  if (degree < 1 || degree > 3) throw InvalidConfig("DD-alpha degree must be 1, 2 or 3");
  const std::vector<Label> labels = dd_labels(training);
  const std::vector<Monomial> feats = monomials(degree);
  const AlphaSeparator sep = alpha_procedure(extend_features(training, feats), labels);
  DDAlphaModel model;
  model.degree = degree;
  model.featureExponents = feats;
  model.weights = sep.weights;
  model.zeroLabel = sep.zeroLabel;
  for (int e : sep.errorPath) model.riskPath.push_back(static_cast<double>(e) / static_cast<double>(labels.size()));
  return model;
}

DDAlphaModel fit_ddalpha(std::span<const DDPoint> training, int maxDegree, int folds, std::uint64_t seed) {
  if (maxDegree < 1 || maxDegree > 3) throw InvalidConfig("DD-alpha maximum degree must be 1, 2 or 3");
  const std::vector<Label> labels = dd_labels(training);
  const auto n1 = std::count(labels.begin(), labels.end(), 1);
  if (n1 < 2 || static_cast<std::ptrdiff_t>(labels.size()) - n1 < 2)
    throw InvalidInput("DD-alpha needs at least two points per class");
  if (maxDegree == 1) return fit_ddalpha_degree(training, 1);

  const CVPlan plan{folds, false, seed, true};
  const std::vector<int> fold = assign_folds(labels, plan);
  const int k = fold_count(plan, labels.size());

  int bestDegree = 1;
  int bestErrors = std::numeric_limits<int>::max();
  for (int p = 1; p <= maxDegree; ++p) {
    int errors = 0;
    for (int f = 0; f < k; ++f) {
      std::vector<DDPoint> train, test;
      for (std::size_t i = 0; i < training.size(); ++i) (fold[i] == f ? test : train).push_back(training[i]);
      if (test.empty()) continue;
      try {
        const DDAlphaModel m = fit_ddalpha_degree(train, p);
        for (const auto& z : test) errors += classify_ddalpha(m, z) != *z.label;
      } catch (const Error&) {
        errors += static_cast<int>(test.size());
      }
    }
    if (errors < bestErrors) {
      bestErrors = errors;
      bestDegree = p;
    }
  }
  return fit_ddalpha_degree(training, bestDegree);
}

double ddalpha_score(const DDAlphaModel& model, const DDPoint& z) {
  double s = 0.0;
  for (std::size_t f = 0; f < model.featureExponents.size(); ++f)
    s += model.weights(static_cast<Eigen::Index>(f)) * monomial_value(z.z0, z.z1, model.featureExponents[f]);
  return s;
}

Label classify_ddalpha(const DDAlphaModel& model, const DDPoint& z) {
  const double s = ddalpha_score(model, z);
  if (s > 0.0) return 1;
  if (s < 0.0) return 0;
  return model.zeroLabel;
}

}  // namespace fdd
