#include "fastdd/model_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fastdd/baseline.hpp"
#include "fastdd/error.hpp"
#include "fastdd/seed.hpp"

namespace fdd {

BigInt count_separations(long long n, long long d) {
  if (n < 1 || d < 1) throw InvalidInput("count_separations needs N >= 1 and d >= 1");
  BigInt sum = 0;
  BigInt binom = 1;  // binom(n-1, k)
  for (long long k = 0; k < d && k <= n - 1; ++k) {
    sum += binom;
    binom = binom * (n - 1 - k) / (k + 1);
  }
  return 2 * sum;
}

double log_count_separations(long long n, long long d) {
  if (n < 1 || d < 1) throw InvalidInput("count_separations needs N >= 1 and d >= 1");
  const long long top = std::min(d - 1, n - 1);
  const double a = static_cast<double>(n - 1);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(top + 1));
  for (long long k = 0; k <= top; ++k) {
    const double kk = static_cast<double>(k);
    terms.push_back(std::lgamma(a + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(a - kk + 1.0));
  }
  const double peak = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - peak);
  return std::log(2.0) + peak + std::log(s);
}

double vc_bound(double epsilon, long long m, long long n, int L, int S) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InvalidInput("empirical risk must lie in [0, 1]");
  if (m < 0 || n < 0 || m + n < 2) throw InvalidInput("VC bound needs at least two observations");
  if (L < 0 || S < 0) throw InvalidInput("L and S must be non-negative");
  const long long total = m + n;
  const double logTerm = std::log(static_cast<double>(total)) + log_count_separations(total, L + S + 1);
  return epsilon + std::sqrt(logTerm / (2.0 * static_cast<double>(total)));
}

int max_ls_dim(std::size_t m) { return static_cast<int>((m + 1) / 2); }

std::vector<LSConfig> candidate_pairs(std::size_t m, std::optional<int> maxL) {
  std::vector<LSConfig> out;
  for (int total = 2; total <= max_ls_dim(m); ++total)
    for (int s = 0; s <= total; ++s)
      if (!maxL || total - s <= *maxL) out.push_back({total - s, s});
  return out;
}

int sampling_cap_on_L(const FunctionalDataset& data) {
  const std::vector<double> grid = data.time_grid();
  if (grid.size() < 2) return 1;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < grid.size(); ++i) gap = std::min(gap, grid[i] - grid[i - 1]);
  return static_cast<int>(std::floor(data.domain_end() / gap + 1.0));
}

int FeatureSpec::dim() const { return ls ? ls->dim() : static_cast<int>(points.size()); }

Vector FeatureSpec::apply(const InterpolatedFunction& g, double domainEnd) const {
  if (ls) return ls_transform(g, *ls, domainEnd).coords;
  if (points.empty()) throw InvalidConfig("feature representation has no coordinates");
  Vector v(static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) v(static_cast<Eigen::Index>(k)) = g(points[k]);
  return v;
}

Matrix FeatureSpec::apply(const FunctionalDataset& data) const {
  if (ls) return ls_transform(data, *ls);
  Matrix out(static_cast<Eigen::Index>(data.size()), dim());
  for (std::size_t i = 0; i < data.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = apply(data.interpolants()[i], data.domain_end()).transpose();
  return out;
}

double cv_error(const ClassifierSpec& spec, const Matrix& points, std::span<const Label> labels,
                std::span<const int> folds, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (labels.size() != n || folds.size() != n) throw InvalidInput("cross-validation inputs differ in length");
  const int k = n == 0 ? 0 : *std::max_element(folds.begin(), folds.end()) + 1;
  int errors = 0;
  for (int f = 0; f < k; ++f) {
    std::vector<Eigen::Index> trainIdx, testIdx;
    for (std::size_t i = 0; i < n; ++i) (folds[i] == f ? testIdx : trainIdx).push_back(static_cast<Eigen::Index>(i));
    if (testIdx.empty()) continue;
    const Matrix train = points(trainIdx, Eigen::all);
    std::vector<Label> trainLabels;
    for (auto i : trainIdx) trainLabels.push_back(labels[static_cast<std::size_t>(i)]);
    try {
      const FeatureModel model = fit_feature_model(spec, train, trainLabels, derive_seed(seed, {static_cast<std::uint64_t>(f)}));
      for (auto i : testIdx) errors += model.classify(points.row(i).transpose()) != labels[static_cast<std::size_t>(i)];
    } catch (const Error&) {
      errors += static_cast<int>(testIdx.size());
    }
  }
  return static_cast<double>(errors) / static_cast<double>(n);
}

namespace {

bool better_pair(double err, const LSConfig& c, double bestErr, const LSConfig& best) {
  if (err != bestErr) return err < bestErr;
  if (c.dim() != best.dim()) return c.dim() < best.dim();
  return c.S < best.S;
}

double lda_resubstitution_error(const Matrix& x, std::span<const Label> labels) {
  const ClassifierSpec lda{ClassifierKind::Lda, std::nullopt};
  try {
    const FeatureModel m = fit_feature_model(lda, x, labels, 0);
    const std::vector<Label> pred = m.classify_all(x);
    int errors = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) errors += pred[i] != labels[i];
    return static_cast<double>(errors) / static_cast<double>(labels.size());
  } catch (const Error&) {
    return 1.0;
  }
}

void cross_validate_pairs(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan,
                          std::span<const Label> labels, std::vector<PairScore>& scores,
                          std::span<const std::size_t> which) {
  const std::vector<int> folds = assign_folds(labels, plan);
  const std::uint64_t fitSeed = derive_seed(plan.seed, {1});
  parallel_for(which.size(), default_threads(), [&](std::size_t w) {
    PairScore& s = scores[which[w]];
    s.cvError = cv_error(spec, ls_transform(data, s.config), labels, folds, fitSeed);
  });
}

SelectionOutcome pick_best(std::vector<PairScore> scores, std::span<const std::size_t> evaluated) {
  std::size_t best = evaluated.front();
  for (std::size_t i : evaluated)
    if (better_pair(*scores[i].cvError, scores[i].config, *scores[best].cvError, scores[best].config)) best = i;
  scores[best].selected = true;
  SelectionOutcome out;
  out.features.ls = scores[best].config;
  out.cvError = *scores[best].cvError;
  out.cvIterations = static_cast<int>(evaluated.size());
  out.scores = std::move(scores);
  return out;
}

std::vector<PairScore> screen_scores(const FunctionalDataset& data, bool capL) {
  const std::size_t m = data.time_grid().size();
  std::optional<int> maxL;
  if (capL) maxL = sampling_cap_on_L(data);
  const std::vector<LSConfig> pairs = candidate_pairs(m, maxL);
  if (pairs.empty()) throw InvalidInput("too few discretization points for any (L, S) pair");
  std::vector<PairScore> scores(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) scores[i].config = pairs[i];
  return scores;
}

std::vector<Label> checked_labels(const FunctionalDataset& data) {
  std::vector<Label> labels = data.labels();
  const auto [n0, n1] = data.class_counts();
  if (n0 < 2 || n1 < 2) throw InvalidInput("model selection needs at least two observations per class");
  return labels;
}

}  // namespace

SelectionOutcome vccross_ls(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan, bool capL) {
  const std::vector<Label> labels = checked_labels(data);
  const auto [n0, n1] = data.class_counts();
  std::vector<PairScore> scores = screen_scores(data, capL);

  parallel_for(scores.size(), default_threads(), [&](std::size_t i) {
    PairScore& s = scores[i];
    s.epsilon = lda_resubstitution_error(ls_transform(data, s.config), labels);
    s.epsilonMax = vc_bound(s.epsilon, static_cast<long long>(n0), static_cast<long long>(n1), s.config.L, s.config.S);
  });

  std::vector<double> bounds;
  for (const auto& s : scores) bounds.push_back(s.epsilonMax);
  std::sort(bounds.begin(), bounds.end());
  const double threshold = bounds[std::min<std::size_t>(4, bounds.size() - 1)];
  std::vector<std::size_t> screened;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (scores[i].epsilonMax <= threshold) screened.push_back(i);

  cross_validate_pairs(data, spec, plan, labels, scores, screened);
  return pick_best(std::move(scores), screened);
}

SelectionOutcome cross_ls(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan, bool capL) {
  const std::vector<Label> labels = checked_labels(data);
  const auto [n0, n1] = data.class_counts();
  std::vector<PairScore> scores = screen_scores(data, capL);
  for (auto& s : scores) {
    s.epsilon = lda_resubstitution_error(ls_transform(data, s.config), labels);
    s.epsilonMax = vc_bound(s.epsilon, static_cast<long long>(n0), static_cast<long long>(n1), s.config.L, s.config.S);
  }
  std::vector<std::size_t> all(scores.size());
  std::iota(all.begin(), all.end(), 0);
  cross_validate_pairs(data, spec, plan, labels, scores, all);
  return pick_best(std::move(scores), all);
}

SelectionOutcome cross_dhb(const FunctionalDataset& data, const ClassifierSpec& spec, const CVPlan& plan) {
  const std::vector<Label> labels = checked_labels(data);
  const std::vector<double> grid = data.time_grid();
  if (grid.size() < 3) throw InvalidInput("componentwise selection needs at least three grid points");
  std::vector<double> gaps;
  for (std::size_t i = 1; i < grid.size(); ++i) gaps.push_back(grid[i] - grid[i - 1]);
  const double dt = median(gaps);
  const double minSep = 2.0 * dt * (1.0 - 1e-9);

  const std::size_t m = grid.size();
  const FeatureSpec full{std::nullopt, grid};
  const Matrix values = full.apply(data);
  const std::vector<int> folds = assign_folds(labels, plan);
  const std::uint64_t fitSeed = derive_seed(plan.seed, {1});

  auto evaluate = [&](const std::vector<std::size_t>& cols) {
    std::vector<Eigen::Index> idx(cols.begin(), cols.end());
    return cv_error(spec, values(Eigen::all, idx), labels, folds, fitSeed);
  };

  SelectionOutcome out;
  // Step 1: every pair of grid points at least 2 dt apart.
  std::vector<std::vector<std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (grid[j] - grid[i] >= minSep) pairs.push_back({i, j});
  if (pairs.empty()) throw InvalidInput("no pair of grid points is 2 dt apart");
  std::vector<double> pairErr(pairs.size());
  parallel_for(pairs.size(), default_threads(), [&](std::size_t p) { pairErr[p] = evaluate(pairs[p]); });
  out.cvIterations += static_cast<int>(pairs.size());
  const auto first = static_cast<std::size_t>(std::min_element(pairErr.begin(), pairErr.end()) - pairErr.begin());
  std::vector<std::size_t> selected = pairs[first];
  double current = pairErr[first];
  out.stepErrors.push_back(current);

  for (int step = 2;; ++step) {
    // Admissible points keep 2 dt from every selected one; nearest first.
    std::vector<std::pair<double, std::size_t>> admissible;
    for (std::size_t i = 0; i < m; ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t s : selected) nearest = std::min(nearest, std::abs(grid[i] - grid[s]));
      if (nearest >= minSep) admissible.emplace_back(nearest, i);
    }
    std::stable_sort(admissible.begin(), admissible.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t limit = admissible.size();
    if (step == 2) limit = std::min<std::size_t>(limit, 20);
    if (step == 3) limit = std::min<std::size_t>(limit, 10);
    if (limit == 0) break;

    std::vector<double> err(limit);
    parallel_for(limit, default_threads(), [&](std::size_t c) {
      std::vector<std::size_t> cols = selected;
      cols.push_back(admissible[c].second);
      err[c] = evaluate(cols);
    });
    out.cvIterations += static_cast<int>(limit);
    const auto best = static_cast<std::size_t>(std::min_element(err.begin(), err.end()) - err.begin());
    if (!(err[best] < current)) break;
    selected.push_back(admissible[best].second);
    current = err[best];
    out.stepErrors.push_back(current);
  }

  std::sort(selected.begin(), selected.end());
  for (std::size_t s : selected) out.features.points.push_back(grid[s]);
  out.cvError = current;
  return out;
}

}  // namespace fdd
