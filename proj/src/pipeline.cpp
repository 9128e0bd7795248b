#include "fastdd/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

#include "fastdd/error.hpp"
#include "fastdd/seed.hpp"

namespace fdd {

using nlohmann::json;

std::string_view to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::VCcrossLS: return "vccrossls";
    case SelectorKind::CrossLS: return "crossls";
    case SelectorKind::CrossDHB: return "crossdhb";
    case SelectorKind::Fixed: return "fixed";
  }
  return "?";
}

SelectorKind parse_selector_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "vccrossls") return SelectorKind::VCcrossLS;
  if (s == "crossls") return SelectorKind::CrossLS;
  if (s == "crossdhb") return SelectorKind::CrossDHB;
  if (s == "fixed") return SelectorKind::Fixed;
  throw InvalidConfig("unknown selector '" + s + "'");
}

void PipelineSpec::validate() const {
  classifier.validate();
  if (folds < 2) throw InvalidConfig("cross-validation needs at least two folds");
  if (selector == SelectorKind::Fixed) fixed.validate();
}

json PipelineSpec::to_json() const {
  json j{{"selector", to_string(selector)},
         {"classifier", to_string(classifier.kind)},
         {"nDirections", classifier.nDirections},
         {"maxDegree", classifier.maxDegree},
         {"folds", folds},
         {"capL", capL}};
  if (classifier.depth) j["depth"] = to_string(*classifier.depth);
  if (selector == SelectorKind::Fixed) j["fixed"] = {fixed.L, fixed.S};
  return j;
}

PipelineSpec PipelineSpec::from_json(const json& j) {
  PipelineSpec s;
  s.selector = parse_selector_kind(j.at("selector").get<std::string>());
  s.classifier.kind = parse_classifier_kind(j.at("classifier").get<std::string>());
  if (j.contains("depth")) s.classifier.depth = parse_depth_kind(j.at("depth").get<std::string>());
  s.classifier.nDirections = j.value("nDirections", kDefaultDirections);
  s.classifier.maxDegree = j.value("maxDegree", 3);
  s.folds = j.value("folds", 10);
  s.classifier.folds = s.folds;
  s.capL = j.value("capL", false);
  if (j.contains("fixed")) s.fixed = {j.at("fixed").at(0).get<int>(), j.at("fixed").at(1).get<int>()};
  return s;
}

TrainedPipeline::TrainedPipeline(PipelineSpec spec, FeatureSpec features, FeatureModel model, double timeOffset,
                                 double domainEnd, std::uint64_t seed)
    : spec_(std::move(spec)),
      features_(std::move(features)),
      model_(std::move(model)),
      timeOffset_(timeOffset),
      domainEnd_(domainEnd),
      seed_(seed) {}

Vector TrainedPipeline::represent(const DiscretizedFunction& f) const {
  f.validate();
  return features_.apply(interpolate_on_axis(f, timeOffset_, domainEnd_), domainEnd_);
}

Label TrainedPipeline::classify(const DiscretizedFunction& f) const { return model_.classify(represent(f)); }

json TrainedPipeline::to_json() const {
  json features;
  if (features_.ls) {
    features["ls"] = {features_.ls->L, features_.ls->S};
  } else {
    features["points"] = features_.points;
  }
  return json{{"format", "fastdd-model"},
              {"version", kModelFormatVersion},
              {"spec", spec_.to_json()},
              {"seed", seed_},
              {"timeOffset", timeOffset_},
              {"domainEnd", domainEnd_},
              {"features", features},
              {"model", model_.to_json()}};
}

TrainedPipeline TrainedPipeline::from_json(const json& j) {
  try {
    if (j.value("format", std::string()) != "fastdd-model") throw Incompatible("not a fastdd model file");
    const int version = j.at("version").get<int>();
    if (version != kModelFormatVersion)
      throw Incompatible("model format version " + std::to_string(version) + " is not supported (expected " +
                         std::to_string(kModelFormatVersion) + ")");
    FeatureSpec features;
    const json& f = j.at("features");
    if (f.contains("ls")) {
      features.ls = LSConfig{f.at("ls").at(0).get<int>(), f.at("ls").at(1).get<int>()};
      features.ls->validate();
    } else {
      features.points = f.at("points").get<std::vector<double>>();
    }
    return TrainedPipeline(PipelineSpec::from_json(j.at("spec")), std::move(features),
                           FeatureModel::from_json(j.at("model")), j.at("timeOffset").get<double>(),
                           j.at("domainEnd").get<double>(), j.at("seed").get<std::uint64_t>());
  } catch (const json::exception& e) {
    throw Incompatible(std::string("malformed model record: ") + e.what());
  } catch (const InvalidConfig& e) {
    throw Incompatible(std::string("malformed model record: ") + e.what());
  }
}

void TrainedPipeline::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << to_json().dump(1) << '\n';
  if (!out) throw InvalidInput("failed writing " + path.string());
}

TrainedPipeline TrainedPipeline::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Incompatible("model file " + path.string() + " is truncated or corrupt: " + e.what());
  }
  return from_json(j);
}

SelectionOutcome select_representation(const FunctionalDataset& data, const PipelineSpec& spec, std::uint64_t seed) {
  spec.validate();
  const CVPlan plan{spec.folds, false, derive_seed(seed, {1}), true};
  ClassifierSpec clf = spec.classifier;
  switch (spec.selector) {
    case SelectorKind::VCcrossLS: return vccross_ls(data, clf, plan, spec.capL);
    case SelectorKind::CrossLS: return cross_ls(data, clf, plan, spec.capL);
    case SelectorKind::CrossDHB: return cross_dhb(data, clf, plan);
    case SelectorKind::Fixed: {
      SelectionOutcome out;
      out.features.ls = spec.fixed;
      return out;
    }
  }
  throw InvalidConfig("unknown selector");
}

TrainedPipeline train_pipeline(const FunctionalDataset& data, const PipelineSpec& spec, std::uint64_t seed) {
  SelectionOutcome selection = select_representation(data, spec, seed);
  const Matrix x = selection.features.apply(data);
  const std::vector<Label> labels = data.labels();
  FeatureModel model = fit_feature_model(spec.classifier, x, labels, derive_seed(seed, {2}));
  TrainedPipeline out(spec, selection.features, std::move(model), data.time_offset(), data.domain_end(), seed);
  out.set_selection(std::move(selection));
  return out;
}

namespace {

std::string describe(const FeatureSpec& f) {
  std::ostringstream s;
  if (f.ls) {
    s << "(" << f.ls->L << "," << f.ls->S << ")";
  } else {
    s << "{";
    for (std::size_t i = 0; i < f.points.size(); ++i) s << (i ? ";" : "") << f.points[i];
    s << "}";
  }
  return s.str();
}

}  // namespace

LooReport evaluate_loo(const FunctionalDataset& data, const PipelineSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::vector<Label> labels = data.labels();
  const auto [n0, n1] = data.class_counts();
  if (n0 < 2 || n1 < 2) throw InvalidInput("leave-one-out needs at least two observations per class");
  const std::size_t n = data.size();

  LooReport report;
  report.n = n;
  report.predictions.assign(n, 0);
  report.selections.assign(n, "");
  std::vector<double> trainSec(n), classifySec(n), iterations(n);
  using Clock = std::chrono::steady_clock;

  parallel_for(n, default_threads(), [&](std::size_t i) {
    std::vector<std::size_t> keep;
    keep.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) keep.push_back(j);
    const FunctionalDataset train = data.subset(keep);
    const auto t0 = Clock::now();
    const TrainedPipeline model = train_pipeline(train, spec, derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    const auto t1 = Clock::now();
    report.predictions[i] = model.classify(data.raw()[i]);
    const auto t2 = Clock::now();
    trainSec[i] = std::chrono::duration<double>(t1 - t0).count();
    classifySec[i] = std::chrono::duration<double>(t2 - t1).count();
    iterations[i] = model.selection() ? model.selection()->cvIterations : 0;
    report.selections[i] = describe(model.features());
  });

  for (std::size_t i = 0; i < n; ++i) {
    report.errors += report.predictions[i] != labels[i];
    report.meanTrainSeconds += trainSec[i] / static_cast<double>(n);
    report.meanClassifySeconds += classifySec[i] / static_cast<double>(n);
    report.meanCvIterations += iterations[i] / static_cast<double>(n);
  }
  report.errorRate = static_cast<double>(report.errors) / static_cast<double>(n);
  return report;
}

}  // namespace fdd
