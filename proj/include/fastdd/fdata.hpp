#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdd {

/// Class labels are 0 or 1.
using Label = int;

/// One observed curve: ordered time stamps with values, possibly irregular.
struct DiscretizedFunction {
  std::vector<double> times;
  std::vector<double> values;
  std::optional<Label> label;

  /// Throws InvalidInput unless times/values are equally long, nonempty,
  /// finite and times are non-decreasing.
  void validate() const;
};

/// Piecewise-linear interpolant on [0, T], constant outside the knot range.
class InterpolatedFunction {
 public:
  InterpolatedFunction(std::vector<double> knots, std::vector<double> knotValues, double domainEnd);

  double operator()(double t) const;

  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> knot_values() const noexcept { return values_; }
  double domain_end() const noexcept { return domainEnd_; }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
  double domainEnd_;
};

/// Connects the observed points by line segments. Duplicate time stamps keep
/// the last value. Requires `domainEnd` >= the last time stamp.
InterpolatedFunction interpolate(const DiscretizedFunction& f, double domainEnd);

/// Exact integral of g over [a, b] (closed-form trapezoids per linear piece).
double integrate_level(const InterpolatedFunction& g, double a, double b);

/// Exact integral of the piecewise-constant derivative of g over [a, b].
/// The constant extensions outside the knot range contribute nothing.
double integrate_slope(const InterpolatedFunction& g, double a, double b);

/// A set of curves sharing one time axis. Times are shifted so that the
/// earliest time stamp over all observations is 0; `domain_end()` is the
/// latest shifted time stamp.
class FunctionalDataset {
 public:
  FunctionalDataset() = default;

  /// Validates every observation and normalizes the time axis. `ids` may be
  /// empty, in which case observations are numbered.
  static FunctionalDataset from_observations(std::vector<DiscretizedFunction> observations,
                                             std::vector<std::string> ids = {});

  std::size_t size() const noexcept { return observations_.size(); }
  const std::vector<DiscretizedFunction>& observations() const noexcept { return observations_; }
  const DiscretizedFunction& operator[](std::size_t i) const { return observations_[i]; }
  /// Observations as supplied, on the original time axis.
  const std::vector<DiscretizedFunction>& raw() const noexcept { return raw_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<InterpolatedFunction>& interpolants() const noexcept { return interpolants_; }

  double domain_end() const noexcept { return domainEnd_; }
  /// Amount subtracted from the original time stamps.
  double time_offset() const noexcept { return timeOffset_; }

  /// Labels of all observations; throws ValidationError if any is missing.
  std::vector<Label> labels() const;
  bool fully_labeled() const;
  /// Number of observations per class, {n0, n1}.
  std::pair<std::size_t, std::size_t> class_counts() const;

  /// Sorted distinct (shifted) time stamps over all observations.
  std::vector<double> time_grid() const;

  /// Dataset of the selected observations with a freshly normalized time axis.
  FunctionalDataset subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<DiscretizedFunction> observations_;
  std::vector<DiscretizedFunction> raw_;
  std::vector<std::string> ids_;
  std::vector<InterpolatedFunction> interpolants_;
  double domainEnd_ = 0.0;
  double timeOffset_ = 0.0;
};

/// Shifts `f` by `offset` and interpolates on [0, max(T, last shifted time)].
/// Used to bring new curves onto a training dataset's time axis.
InterpolatedFunction interpolate_on_axis(const DiscretizedFunction& f, double offset, double domainEnd);

}  // namespace fdd
