#include "fastdd/fdata.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fastdd/error.hpp"

namespace fdd {

void DiscretizedFunction::validate() const {
  if (times.empty()) throw InvalidInput("discretized function has no points");
  if (times.size() != values.size())
    throw InvalidInput("discretized function: times and values differ in length");
  for (std::size_t j = 0; j < times.size(); ++j) {
    if (!std::isfinite(times[j]) || !std::isfinite(values[j]))
      throw InvalidInput("discretized function contains a non-finite entry");
    if (j > 0 && times[j] < times[j - 1])
      throw InvalidInput("discretized function: time stamps must be non-decreasing");
  }
  if (label && *label != 0 && *label != 1) throw InvalidInput("class label must be 0 or 1");
}

InterpolatedFunction::InterpolatedFunction(std::vector<double> knots, std::vector<double> knotValues,
                                           double domainEnd)
    : knots_(std::move(knots)), values_(std::move(knotValues)), domainEnd_(domainEnd) {
  if (knots_.empty() || knots_.size() != values_.size())
    throw InvalidInput("interpolated function needs matching, nonempty knots and values");
  if (!(domainEnd_ > 0.0) && !(knots_.size() == 1 && domainEnd_ >= knots_.back()))
    throw InvalidInput("domain end must be positive");
  if (knots_.back() > domainEnd_) throw InvalidInput("knots extend past the domain end");
  for (std::size_t j = 1; j < knots_.size(); ++j)
    if (!(knots_[j] > knots_[j - 1])) throw InvalidInput("knots must be strictly increasing");
}

double InterpolatedFunction::operator()(double t) const {
  if (t <= knots_.front()) return values_.front();
  if (t >= knots_.back()) return values_.back();
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double w = (t - knots_[j]) / (knots_[j + 1] - knots_[j]);
  return values_[j] + w * (values_[j + 1] - values_[j]);
}

InterpolatedFunction interpolate(const DiscretizedFunction& f, double domainEnd) {
  f.validate();
  if (domainEnd < f.times.back()) throw InvalidInput("domain end precedes the last time stamp");
  std::vector<double> knots;
  std::vector<double> vals;
  knots.reserve(f.times.size());
  vals.reserve(f.times.size());
  for (std::size_t j = 0; j < f.times.size(); ++j) {
    if (!knots.empty() && knots.back() == f.times[j]) {
      vals.back() = f.values[j];
    } else {
      knots.push_back(f.times[j]);
      vals.push_back(f.values[j]);
    }
  }
  return InterpolatedFunction(std::move(knots), std::move(vals), domainEnd);
}

InterpolatedFunction interpolate_on_axis(const DiscretizedFunction& f, double offset, double domainEnd) {
  DiscretizedFunction shifted = f;
  for (double& t : shifted.times) t -= offset;
  // Times before the axis origin are clamped onto it.
  for (double& t : shifted.times) t = std::max(t, 0.0);
  return interpolate(shifted, std::max(domainEnd, shifted.times.back()));
}

namespace {

void check_range(double a, double b) {
  if (!(a <= b)) throw InvalidRange("integration bounds out of order");
}

}  // namespace

double integrate_level(const InterpolatedFunction& g, double a, double b) {
  check_range(a, b);
  const auto knots = g.knots();
  const auto vals = g.knot_values();
  double total = 0.0;

  // Constant pieces left of the first and right of the last knot.
  if (a < knots.front()) total += vals.front() * (std::min(b, knots.front()) - a);
  if (b > knots.back()) total += vals.back() * (b - std::max(a, knots.back()));

  const double lo = std::max(a, knots.front());
  const double hi = std::min(b, knots.back());
  if (lo >= hi) return total;

  std::size_t j = static_cast<std::size_t>(std::upper_bound(knots.begin(), knots.end(), lo) - knots.begin()) - 1;
  for (; j + 1 < knots.size() && knots[j] < hi; ++j) {
    const double s = std::max(lo, knots[j]);
    const double e = std::min(hi, knots[j + 1]);
    if (e <= s) continue;
    const double slope = (vals[j + 1] - vals[j]) / (knots[j + 1] - knots[j]);
    const double gs = vals[j] + slope * (s - knots[j]);
    const double ge = vals[j] + slope * (e - knots[j]);
    total += 0.5 * (gs + ge) * (e - s);
  }
  return total;
}

double integrate_slope(const InterpolatedFunction& g, double a, double b) {
  check_range(a, b);
  const auto knots = g.knots();
  const auto vals = g.knot_values();
  const double lo = std::max(a, knots.front());
  const double hi = std::min(b, knots.back());
  if (lo >= hi) return 0.0;

  double total = 0.0;
  std::size_t j = static_cast<std::size_t>(std::upper_bound(knots.begin(), knots.end(), lo) - knots.begin()) - 1;
  for (; j + 1 < knots.size() && knots[j] < hi; ++j) {
    const double s = std::max(lo, knots[j]);
    const double e = std::min(hi, knots[j + 1]);
    if (e <= s) continue;
    total += (vals[j + 1] - vals[j]) / (knots[j + 1] - knots[j]) * (e - s);
  }
  return total;
}

FunctionalDataset FunctionalDataset::from_observations(std::vector<DiscretizedFunction> observations,
                                                       std::vector<std::string> ids) {
  if (observations.empty()) throw InvalidInput("dataset has no observations");
  if (!ids.empty() && ids.size() != observations.size())
    throw InvalidInput("dataset: ids and observations differ in length");
  for (const auto& f : observations) f.validate();

  double tmin = observations.front().times.front();
  double tmax = observations.front().times.back();
  for (const auto& f : observations) {
    tmin = std::min(tmin, f.times.front());
    tmax = std::max(tmax, f.times.back());
  }
  if (!(tmax > tmin)) throw InvalidInput("dataset time axis has zero length");

  FunctionalDataset ds;
  ds.timeOffset_ = tmin;
  ds.domainEnd_ = tmax - tmin;
  ds.raw_ = observations;
  for (auto& f : observations)
    for (double& t : f.times) t -= tmin;
  ds.observations_ = std::move(observations);
  if (ids.empty()) {
    ids.reserve(ds.observations_.size());
    for (std::size_t i = 0; i < ds.observations_.size(); ++i) ids.push_back(std::to_string(i));
  }
  ds.ids_ = std::move(ids);
  ds.interpolants_.reserve(ds.observations_.size());
  for (const auto& f : ds.observations_) ds.interpolants_.push_back(interpolate(f, ds.domainEnd_));
  return ds;
}

std::vector<Label> FunctionalDataset::labels() const {
  std::vector<Label> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!observations_[i].label) throw ValidationError("observation '" + ids_[i] + "' has no label");
    out.push_back(*observations_[i].label);
  }
  return out;
}

bool FunctionalDataset::fully_labeled() const {
  return std::all_of(observations_.begin(), observations_.end(),
                     [](const DiscretizedFunction& f) { return f.label.has_value(); });
}

std::pair<std::size_t, std::size_t> FunctionalDataset::class_counts() const {
  std::size_t n0 = 0, n1 = 0;
  for (Label y : labels()) (y == 0 ? n0 : n1)++;
  return {n0, n1};
}

std::vector<double> FunctionalDataset::time_grid() const {
  std::set<double> grid;
  for (const auto& f : observations_) grid.insert(f.times.begin(), f.times.end());
  return {grid.begin(), grid.end()};
}

FunctionalDataset FunctionalDataset::subset(std::span<const std::size_t> indices) const {
  std::vector<DiscretizedFunction> obs;
  std::vector<std::string> ids;
  obs.reserve(indices.size());
  ids.reserve(indices.size());
  for (std::size_t i : indices) {
    obs.push_back(raw_.at(i));
    ids.push_back(ids_[i]);
  }
  return from_observations(std::move(obs), std::move(ids));
}

}  // namespace fdd
