#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fastdd/fdata.hpp"
#include "fastdd/pipeline.hpp"

namespace fdd {

enum class SimModel { Model1 = 1, Model2 = 2 };

struct SimulationBench {
  SimModel model = SimModel::Model1;
  int reps = 100;
  int trainPerClass = 50;
  int testPerClass = 50;
};

struct SimulationReport {
  std::vector<double> errors;  // test error per repetition
  double meanError = 0.0;
  /// Quantiles at 0, 0.25, 0.5, 0.75 and 1.
  std::vector<double> quantiles;
  /// How often each representation was selected, keyed like "(2,1)".
  std::map<std::string, int> selections;
  double meanTrainSeconds = 0.0;
};

/// Fresh training and test samples per repetition; everything derives from
/// `seed` and the repetition index.
SimulationReport run_simulation_bench(const SimulationBench& bench, const PipelineSpec& spec, std::uint64_t seed);

/// Type-7 quantile of a sample.
double quantile(std::vector<double> values, double p);

std::string describe_features(const FeatureSpec& f);

nlohmann::json to_json(const SimulationReport& r, bool withTimings);
nlohmann::json to_json(const LooReport& r, bool withTimings);

}  // namespace fdd
