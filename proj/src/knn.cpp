#include "fastdd/knn.hpp"

#include <algorithm>
#include <numeric>

#include "fastdd/error.hpp"

namespace fdd {

Label knn_vote(std::span<const double> distances, std::span<const Label> labels, int k, double tieTolerance) {
  if (distances.size() != labels.size()) throw InvalidInput("kNN: distances and labels differ in length");
  if (k < 1 || static_cast<std::size_t>(k) > distances.size()) throw InvalidInput("kNN: k out of range");
  std::vector<double> d(distances.begin(), distances.end());
  std::nth_element(d.begin(), d.begin() + (k - 1), d.end());
  const double radius = d[static_cast<std::size_t>(k - 1)] * (1.0 + tieTolerance);
  int c0 = 0, c1 = 0;
  for (std::size_t i = 0; i < distances.size(); ++i)
    if (distances[i] <= radius) (labels[i] == 1 ? c1 : c0)++;
  return c0 < c1 ? 1 : 0;
}

std::vector<int> knn_loo_errors(const Matrix& distances, std::span<const Label> labels, int kMax,
                                double tieTolerance) {
  const auto n = static_cast<std::size_t>(distances.rows());
  if (distances.cols() != distances.rows() || labels.size() != n)
    throw InvalidInput("kNN LOO: distance matrix does not match labels");
  if (kMax < 1 || static_cast<std::size_t>(kMax) > n - 1) throw InvalidInput("kNN LOO: kMax out of range");

  std::vector<int> errors(static_cast<std::size_t>(kMax), 0);
  std::vector<std::size_t> order(n - 1);
  std::vector<double> ds(n - 1);
  std::vector<int> prefix1(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) order[p++] = j;
    const auto row = static_cast<Eigen::Index>(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return distances(row, static_cast<Eigen::Index>(a)) < distances(row, static_cast<Eigen::Index>(b));
    });
    prefix1[0] = 0;
    for (std::size_t q = 0; q < n - 1; ++q) {
      ds[q] = distances(row, static_cast<Eigen::Index>(order[q]));
      prefix1[q + 1] = prefix1[q] + (labels[order[q]] == 1 ? 1 : 0);
    }
    for (int k = 1; k <= kMax; ++k) {
      // The neighborhood extends over every distance tied with the k-th one.
      const double radius = ds[static_cast<std::size_t>(k - 1)] * (1.0 + tieTolerance);
      const auto members = static_cast<std::size_t>(std::upper_bound(ds.begin(), ds.end(), radius) - ds.begin());
      const int c1 = prefix1[members];
      const int c0 = static_cast<int>(members) - c1;
      const Label predicted = c0 < c1 ? 1 : 0;
      if (predicted != labels[i]) ++errors[static_cast<std::size_t>(k - 1)];
    }
  }
  return errors;
}

int argmin_k(std::span<const int> looErrors) {
  if (looErrors.empty()) throw InvalidInput("no k candidates");
  return static_cast<int>(std::min_element(looErrors.begin(), looErrors.end()) - looErrors.begin()) + 1;
}

}  // namespace fdd
