#include <doctest.h>

#include <algorithm>
#include <random>

#include "fastdd/ddplot.hpp"
#include "fastdd/error.hpp"
#include "fastdd/knn.hpp"
#include "../support.hpp"

using namespace fdd;

namespace {

// Exhaustive-scan kNN: sort all distances, take every point within the k-th
// smallest one, majority with ties to 0.
Label naive_knn(const std::vector<DDPoint>& train, const DDPoint& z, int k, std::size_t skip = SIZE_MAX) {
  std::vector<double> d;
  for (std::size_t i = 0; i < train.size(); ++i)
    if (i != skip) d.push_back(std::max(std::abs(train[i].z0 - z.z0), std::abs(train[i].z1 - z.z1)));
  std::vector<double> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  const double r = sorted[static_cast<std::size_t>(k - 1)];
  int c0 = 0, c1 = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (i == skip) continue;
    if (d[j++] <= r) (*train[i].label == 1 ? c1 : c0)++;
  }
  return c1 > c0 ? 1 : 0;
}

int naive_k(const std::vector<DDPoint>& train, int kMax) {
  int bestK = 1, bestErr = INT32_MAX;
  for (int k = 1; k <= kMax; ++k) {
    int err = 0;
    for (std::size_t i = 0; i < train.size(); ++i) err += naive_knn(train, train[i], k, i) != *train[i].label;
    if (err < bestErr) {
      bestErr = err;
      bestK = k;
    }
  }
  return bestK;
}

std::vector<DDPoint> random_plot(std::mt19937_64& rng, int n, bool grid) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> g(0, 4);
  std::vector<DDPoint> pts;
  for (int i = 0; i < n; ++i) {
    const Label y = i % 2;
    DDPoint z = grid ? DDPoint{g(rng) / 4.0, g(rng) / 4.0, y} : DDPoint{u(rng), u(rng), y};
    if (!grid && y == 1) z.z1 = std::min(1.0, z.z1 + 0.2);
    pts.push_back(z);
  }
  return pts;
}

}  // namespace

TEST_CASE("DD-plot coordinates") {
  std::mt19937_64 rng(41);
  const Matrix c0 = testing::standard_cloud(30, 2, rng);
  const Matrix c1 = testing::standard_cloud(30, 2, rng, 4.0);
  const Matrix q = column_mean(c0).transpose();
  const DDTransform t = dd_transform(c0, c1, q, DepthKind::Mahalanobis, 1);
  CHECK(t.query[0].z0 == doctest::Approx(1.0));
  CHECK(t.training.size() == 60);
  CHECK(*t.training.front().label == 0);
  CHECK(*t.training.back().label == 1);

  double lo = 0, hi = 0;
  for (const auto& z : t.training) {
    lo += std::min(z.z0, z.z1);
    hi += std::max(z.z0, z.z1);
  }
  CHECK(lo < hi);

  const DDTransform same = dd_transform(c0, c0, c1, DepthKind::Spatial, 1);
  for (const auto& z : same.query) CHECK(z.z0 == z.z1);
}

TEST_CASE("DD-plot stays in the unit square and mirrors under label swap") {
  std::mt19937_64 rng(43);
  for (DepthKind kind : {DepthKind::Mahalanobis, DepthKind::Spatial, DepthKind::Projection}) {
    const Matrix c0 = testing::standard_cloud(25, 3, rng);
    const Matrix c1 = testing::standard_cloud(20, 3, rng, 1.0);
    const Matrix q = testing::standard_cloud(30, 3, rng, 0.5) * 10.0;
    const DDTransform t = dd_transform(c0, c1, q, kind, 5, 200);
    for (const auto& z : t.query) {
      CHECK(z.z0 >= 0.0);
      CHECK(z.z0 <= 1.0);
      CHECK(z.z1 >= 0.0);
      CHECK(z.z1 <= 1.0);
    }
    if (kind != DepthKind::Projection) {
      const DDTransform s = dd_transform(c1, c0, q, kind, 5, 200);
      for (std::size_t i = 0; i < static_cast<std::size_t>(q.rows()); ++i) {
        CHECK(s.query[i].z0 == t.query[i].z1);
        CHECK(s.query[i].z1 == t.query[i].z0);
      }
    }
  }
}

TEST_CASE("k grid for the DD-plot") {
  CHECK(ddknn_k_max(100) == 50);
  CHECK(ddknn_k_max(4) == 2);
  CHECK(ddknn_k_max(3) == 2);
  CHECK(ddknn_k_max(1000) == 317);
}

TEST_CASE("DD-kNN neighborhoods and votes") {
  std::vector<DDPoint> train{{0.5, 0.6, 0}, {0.5, 0.4, 0}, {0.6, 0.5, 0}, {0.45, 0.5, 1}, {0.55, 0.5, 1}};
  const DDPoint z{0.5, 0.5, {}};
  // Class-0 points tie at 0.1, so all three join the 3-neighborhood.
  CHECK(classify_ddknn(DDkNNModel{train, 3}, z) == 0);
  // Distinct distances: two class-1 at 0.05 and the nearest class-0 point.
  train[1].z1 = 0.39;
  train[2].z0 = 0.62;
  CHECK(classify_ddknn(DDkNNModel{train, 3}, z) == 1);
  // Vote ties go to 0.
  CHECK(classify_ddknn(DDkNNModel{{{0.1, 0.1, 0}, {0.9, 0.9, 1}}, 2}, z) == 0);
  // A training point queried with k = 1 returns its label.
  CHECK(classify_ddknn(DDkNNModel{train, 1}, train[3]) == 1);
}

TEST_CASE("separable DD-plot selects k = 1") {
  std::vector<DDPoint> train;
  for (int i = 0; i < 10; ++i) {
    train.push_back({0.6 + 0.03 * i, 0.1 + 0.02 * i, 0});
    train.push_back({0.1 + 0.02 * i, 0.6 + 0.03 * i, 1});
  }
  CHECK(fit_ddknn(train).k == 1);
}

TEST_CASE("identical points degenerate to the majority") {
  std::vector<DDPoint> train(7, DDPoint{0.3, 0.3, 0});
  for (int i = 0; i < 4; ++i) train[static_cast<std::size_t>(i)].label = 1;
  const DDkNNModel m = fit_ddknn(train);
  CHECK(classify_ddknn(m, {0.3, 0.3, {}}) == 1);
  CHECK(classify_ddknn(m, {0.9, 0.1, {}}) == 1);
}

TEST_CASE("DD-kNN needs two points per class") {
  CHECK_THROWS_AS(fit_ddknn({{0.1, 0.2, 0}, {0.2, 0.1, 0}, {0.5, 0.5, 1}}), InvalidInput);
  CHECK_THROWS_AS(fit_ddknn({{0.1, 0.2, 0}, {0.2, 0.1, 0}, {0.5, 0.5, {}}}), InvalidInput);
}

TEST_CASE("DD-kNN agrees with an exhaustive scan") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> size(4, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const bool grid = trial % 2 == 0;
    const auto train = random_plot(rng, size(rng), grid);
    const int kMax = ddknn_k_max(train.size());
    const DDkNNModel m = fit_ddknn(train);
    CHECK(m.k == naive_k(train, kMax));
    for (const auto& q : random_plot(rng, 10, grid)) CHECK(classify_ddknn(m, q) == naive_knn(train, q, m.k));
  }
}

TEST_CASE("LOO error table and argmin") {
  Matrix d(4, 4);
  d << 0, 1, 2, 3, 1, 0, 1, 2, 2, 1, 0, 1, 3, 2, 1, 0;
  const std::vector<Label> y{0, 0, 1, 1};
  const auto err = knn_loo_errors(d, y, 3);
  CHECK(err.size() == 3);
  CHECK(err[0] == 1);
  CHECK(argmin_k(std::vector<int>{3, 1, 1, 2}) == 2);
  CHECK_THROWS_AS(knn_loo_errors(d, y, 4), InvalidInput);
}
