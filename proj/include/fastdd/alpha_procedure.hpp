#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fastdd/ddplot.hpp"

namespace fdd {

/// The D-feature z0^a * z1^b.
struct Monomial {
  int a = 0;
  int b = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All monomials with 1 <= a + b <= degree, by total degree, then by
/// decreasing power of z0.
std::vector<Monomial> monomials(int degree);

Vector extend_features(const DDPoint& z, std::span<const Monomial> features);
Matrix extend_features(std::span<const DDPoint> points, std::span<const Monomial> features);

/// Best separating line through the origin of a plane.
struct OriginLine {
  int errors = 0;
  /// Angle of the normal: points with x cos(angle) + y sin(angle) > 0 are
  /// labeled 1, < 0 labeled 0, exactly 0 get the fallback label.
  double angle = 0.0;
  /// Angular width of the interval of equally good normals; the returned
  /// angle is its midpoint.
  double width = 0.0;
};

/// Minimizes the number of misclassified points over all origin-passing
/// lines by sweeping the normal angle once around the circle, O(n log n).
/// Among equal-error angular intervals the widest one wins.
OriginLine best_origin_line(std::span<const double> x, std::span<const double> y, std::span<const Label> labels,
                            Label zeroLabel);

/// Outcome of the stepwise alpha-procedure on a feature matrix.
struct AlphaSeparator {
  Vector weights;               // linear functional over the feature columns
  std::vector<int> order;       // features in the order they were merged
  std::vector<int> errorPath;   // training errors after each accepted step
  Label zeroLabel = 0;          // label for a score of exactly 0
};

/// Step 1 picks the best pair of features and merges it into one combined
/// feature; every further step merges the remaining feature that strictly
/// lowers the training error, until none does or none is left. Merged
/// features never re-enter.
AlphaSeparator alpha_procedure(const Matrix& features, std::span<const Label> labels);

struct DDAlphaModel {
  int degree = 1;
  std::vector<Monomial> featureExponents;
  Vector weights;
  Label zeroLabel = 0;
  std::vector<double> riskPath;  // empirical risk after each step
};

/// Alpha-procedure on the degree-`degree` polynomial extension of the plot.
DDAlphaModel fit_ddalpha_degree(std::span<const DDPoint> training, int degree);

/// Selects the degree in 1..maxDegree by stratified `folds`-fold
/// cross-validation (ties to the smaller degree) and refits on all points.
DDAlphaModel fit_ddalpha(std::span<const DDPoint> training, int maxDegree = 3, int folds = 10,
                         std::uint64_t seed = 0);

double ddalpha_score(const DDAlphaModel& model, const DDPoint& z);
Label classify_ddalpha(const DDAlphaModel& model, const DDPoint& z);

}  // namespace fdd
