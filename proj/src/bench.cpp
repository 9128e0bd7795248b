#include "fastdd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "fastdd/cv.hpp"
#include "fastdd/error.hpp"
#include "fastdd/seed.hpp"
#include "fastdd/simulate.hpp"

namespace fdd {

using nlohmann::json;

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw InvalidInput("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = p * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::string describe_features(const FeatureSpec& f) {
  std::ostringstream s;
  if (f.ls) {
    s << "(" << f.ls->L << "," << f.ls->S << ")";
  } else {
    s << "points:" << f.points.size();
  }
  return s.str();
}

SimulationReport run_simulation_bench(const SimulationBench& bench, const PipelineSpec& spec, std::uint64_t seed) {
  if (bench.reps < 1 || bench.trainPerClass < 2 || bench.testPerClass < 1)
    throw InvalidConfig("benchmark needs reps >= 1, >= 2 training and >= 1 test curves per class");
  spec.validate();
  const auto generate = bench.model == SimModel::Model1 ? model1 : model2;

  const auto reps = static_cast<std::size_t>(bench.reps);
  std::vector<double> errors(reps), seconds(reps);
  std::vector<std::string> chosen(reps);
  parallel_for(reps, default_threads(), [&](std::size_t r) {
    const FunctionalDataset train = generate(bench.trainPerClass, derive_seed(seed, {r, 0}), OUNoiseSpec{});
    const FunctionalDataset test = generate(bench.testPerClass, derive_seed(seed, {r, 1}), OUNoiseSpec{});
    const auto t0 = std::chrono::steady_clock::now();
    const TrainedPipeline model = train_pipeline(train, spec, derive_seed(seed, {r, 2}));
    seconds[r] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int wrong = 0;
    for (const auto& f : test.raw()) wrong += model.classify(f) != *f.label;
    errors[r] = static_cast<double>(wrong) / static_cast<double>(test.size());
    chosen[r] = describe_features(model.features());
  });

  SimulationReport report;
  report.errors = errors;
  for (std::size_t r = 0; r < reps; ++r) {
    report.meanError += errors[r] / static_cast<double>(reps);
    report.meanTrainSeconds += seconds[r] / static_cast<double>(reps);
    ++report.selections[chosen[r]];
  }
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) report.quantiles.push_back(quantile(errors, p));
  return report;
}

json to_json(const SimulationReport& r, bool withTimings) {
  json j{{"errors", r.errors},
         {"meanError", r.meanError},
         {"quantiles", {{"min", r.quantiles[0]}, {"q25", r.quantiles[1]}, {"median", r.quantiles[2]},
                        {"q75", r.quantiles[3]}, {"max", r.quantiles[4]}}},
         {"selections", r.selections}};
  if (withTimings) j["meanTrainSeconds"] = r.meanTrainSeconds;
  return j;
}

json to_json(const LooReport& r, bool withTimings) {
  json j{{"n", r.n},
         {"errors", r.errors},
         {"errorRate", r.errorRate},
         {"meanCvIterations", r.meanCvIterations},
         {"predictions", r.predictions},
         {"selections", r.selections}};
  if (withTimings) {
    j["meanTrainSeconds"] = r.meanTrainSeconds;
    j["meanClassifySeconds"] = r.meanClassifySeconds;
  }
  return j;
}

}  // namespace fdd
