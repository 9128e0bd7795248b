#include <doctest.h>

#include <random>

#include "fastdd/error.hpp"
#include "fastdd/fdata.hpp"
#include "../support.hpp"

using namespace fdd;

namespace {

// Simpson's rule on every piece between consecutive breakpoints; exact for
// piecewise-linear integrands.
double simpson_oracle(const InterpolatedFunction& g, double a, double b) {
  std::vector<double> cuts{a, b};
  for (double k : g.knots())
    if (k > a && k < b) cuts.push_back(k);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double l = cuts[i - 1], r = cuts[i];
    total += (r - l) / 6.0 * (g(l) + 4.0 * g(0.5 * (l + r)) + g(r));
  }
  return total;
}

InterpolatedFunction from(std::vector<double> t, std::vector<double> v, double T) {
  return interpolate(DiscretizedFunction{std::move(t), std::move(v), {}}, T);
}

}  // namespace

TEST_CASE("interpolation evaluates segments and extends constantly") {
  CHECK(from({0, 1}, {0, 2}, 1)(0.5) == doctest::Approx(1.0));
  const auto flat = from({0.2, 0.8}, {3, 3}, 1);
  CHECK(flat(0.0) == 3.0);
  CHECK(flat(1.0) == 3.0);
  CHECK(from({0, 0.5, 1}, {0, 1, 0}, 1)(0.25) == doctest::Approx(0.5));
}

TEST_CASE("interpolation reproduces the observations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const DiscretizedFunction f = testing::random_curve(7, rng);
    const auto g = interpolate(f, 1.0);
    for (std::size_t j = 0; j < f.times.size(); ++j) CHECK(g(f.times[j]) == doctest::Approx(f.values[j]).epsilon(1e-14));
    // Idempotent on its own knots.
    DiscretizedFunction again{std::vector<double>(g.knots().begin(), g.knots().end()),
                              std::vector<double>(g.knot_values().begin(), g.knot_values().end()), {}};
    const auto h = interpolate(again, 1.0);
    for (double t = 0.0; t <= 1.0; t += 0.01) CHECK(h(t) == g(t));
  }
}

TEST_CASE("duplicate time stamps keep the last value") {
  const auto g = from({0, 0.5, 0.5, 1}, {0, 7, 1, 0}, 1);
  CHECK(g.knots().size() == 3);
  CHECK(g(0.5) == 1.0);
  CHECK(g(0.25) == doctest::Approx(0.5));
}

TEST_CASE("single-point functions are constant") {
  const auto g = from({0.3}, {4}, 1);
  CHECK(g(0.0) == 4.0);
  CHECK(g(1.0) == 4.0);
  CHECK(integrate_level(g, 0, 1) == doctest::Approx(4.0));
  CHECK(integrate_slope(g, 0, 1) == 0.0);
}

TEST_CASE("invalid observations are rejected") {
  CHECK_THROWS_AS(interpolate(DiscretizedFunction{{}, {}, {}}, 1), InvalidInput);
  CHECK_THROWS_AS(interpolate(DiscretizedFunction{{0, 1}, {1}, {}}, 1), InvalidInput);
  CHECK_THROWS_AS(interpolate(DiscretizedFunction{{1, 0}, {1, 2}, {}}, 1), InvalidInput);
  CHECK_THROWS_AS(interpolate(DiscretizedFunction{{0, 1}, {1, std::nan("")}, {}}, 1), InvalidInput);
}

TEST_CASE("level integrals") {
  const auto id = from({0, 1}, {0, 1}, 1);
  CHECK(integrate_level(id, 0, 0.5) == doctest::Approx(0.125));
  CHECK(integrate_level(from({0, 2}, {1.5, 1.5}, 2), 0, 2) == doctest::Approx(3.0));
  CHECK(integrate_level(from({0, 0.5, 1}, {0, 1, 0}, 1), 0, 1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(integrate_level(id, 0.6, 0.5), InvalidRange);
}

TEST_CASE("slope integrals") {
  CHECK(integrate_slope(from({0, 1}, {0, 1}, 1), 0, 1) == doctest::Approx(1.0));
  CHECK(integrate_slope(from({0, 1}, {2, 2}, 1), 0.1, 0.9) == 0.0);
  CHECK(integrate_slope(from({0, 0.5, 1}, {0, 1, 0}, 1), 0.25, 0.75) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(integrate_slope(from({0, 1}, {0, 1}, 1), 1, 0), InvalidRange);
  // Constant extensions carry no slope.
  CHECK(integrate_slope(from({0.4, 0.6}, {0, 1}, 1), 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("integrals agree with Simpson oracle and are additive") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = interpolate(testing::random_curve(1 + trial % 9, rng), 1.0);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    CHECK(integrate_level(g, a, b) == doctest::Approx(simpson_oracle(g, a, b)).epsilon(1e-10));

    std::vector<double> cuts{a, b};
    for (int k = 0; k < 5; ++k) cuts.push_back(a + (b - a) * u(rng));
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t k = 1; k < cuts.size(); ++k) sum += integrate_level(g, cuts[k - 1], cuts[k]);
    CHECK(sum == doctest::Approx(integrate_level(g, a, b)).epsilon(1e-10));

    const double lo = std::max(a, g.knots().front());
    const double hi = std::min(b, g.knots().back());
    if (lo < hi) CHECK(integrate_slope(g, lo, hi) == doctest::Approx(g(hi) - g(lo)).epsilon(1e-12));
  }
}

TEST_CASE("dataset normalizes its time axis") {
  std::vector<DiscretizedFunction> obs{{{1990.5, 1991, 1992}, {1, 2, 3}, 0}, {{1991, 1993}, {0, 1}, 1}};
  const auto data = FunctionalDataset::from_observations(obs);
  CHECK(data.time_offset() == 1990.5);
  CHECK(data.domain_end() == doctest::Approx(2.5));
  CHECK(data[0].times.front() == 0.0);
  CHECK(data.time_grid().size() == 4);
  CHECK(data.ids() == std::vector<std::string>{"0", "1"});
  CHECK(data.class_counts() == std::pair<std::size_t, std::size_t>{1, 1});

  const std::vector<std::size_t> second{1};
  const auto sub = data.subset(second);
  CHECK(sub.time_offset() == 1991.0);
  CHECK(sub.domain_end() == 2.0);
  CHECK(sub.raw()[0].times == obs[1].times);
}

TEST_CASE("labels must be present for training") {
  std::vector<DiscretizedFunction> obs{{{0, 1}, {1, 2}, 0}, {{0, 1}, {0, 1}, std::nullopt}};
  const auto data = FunctionalDataset::from_observations(obs);
  CHECK_FALSE(data.fully_labeled());
  CHECK_THROWS_AS(data.labels(), ValidationError);
}

TEST_CASE("new curves are placed on a training axis") {
  DiscretizedFunction f{{10.0, 11.0}, {0.0, 1.0}, {}};
  const auto g = interpolate_on_axis(f, 10.0, 2.0);
  CHECK(g(0.5) == doctest::Approx(0.5));
  CHECK(g(2.0) == 1.0);
  CHECK(g.domain_end() == 2.0);
}
