// fdd: command line front end of the fastdd library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fastdd/bench.hpp"
#include "fastdd/ddplot.hpp"
#include "fastdd/error.hpp"
#include "fastdd/io.hpp"
#include "fastdd/pipeline.hpp"
#include "fastdd/simulate.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kNumeric = 5,
  kIncompatible = 6,
};

struct PipelineFlags {
  std::string selector = "vccrossls";
  std::string classifier = "lda";
  std::string depth;
  std::string fixed = "2,1";
  int folds = 10;
  int nDirections = fdd::kDefaultDirections;
  int maxDegree = 3;
  bool capL = false;

  void attach(CLI::App* app) {
    app->add_option("--selector", selector, "vccrossls | crossls | crossdhb | fixed")->capture_default_str();
    app->add_option("--classifier", classifier, "lda | qda | knn | md | ddknn | ddalpha")->capture_default_str();
    app->add_option("--depth", depth, "mahalanobis | spatial | projection (md, ddknn, ddalpha only)");
    app->add_option("--fixed", fixed, "L,S for --selector fixed")->capture_default_str();
    app->add_option("--folds", folds, "cross-validation folds")->capture_default_str();
    app->add_option("--n-directions", nDirections, "projection depth directions")->capture_default_str();
    app->add_option("--max-degree", maxDegree, "DD-alpha maximum polynomial degree")->capture_default_str();
    app->add_flag("--cap-l", capL, "limit L by the sampling density");
  }

  fdd::PipelineSpec build() const {
    fdd::PipelineSpec spec;
    spec.selector = fdd::parse_selector_kind(selector);
    spec.classifier.kind = fdd::parse_classifier_kind(classifier);
    if (!depth.empty()) spec.classifier.depth = fdd::parse_depth_kind(depth);
    spec.classifier.nDirections = nDirections;
    spec.classifier.maxDegree = maxDegree;
    spec.classifier.folds = folds;
    spec.folds = folds;
    spec.capL = capL;
    spec.fixed = parse_pair(fixed);
    spec.validate();
    return spec;
  }

  static fdd::LSConfig parse_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw fdd::InvalidConfig("expected L,S but got '" + s + "'");
    try {
      return fdd::LSConfig{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
      throw fdd::InvalidConfig("expected L,S but got '" + s + "'");
    }
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fdd::InvalidInput("cannot write " + path);
  out << text;
}

fdd::FunctionalDataset require_labeled(const std::string& path) {
  fdd::FunctionalDataset data = fdd::load_dataset(path);
  if (!data.fully_labeled()) throw fdd::ValidationError(path + ": every observation needs a label");
  return data;
}

int run(int argc, char** argv) {
  CLI::App app{"Classification of functional data with depth-based DD-plots"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out;

  // simulate
  auto* sim = app.add_subcommand("simulate", "Generate a synthetic labeled dataset in long CSV");
  int simModel = 1;
  int simN = 50;
  sim->add_option("--model", simModel, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  sim->add_option("--n-per-class", simN, "curves per class")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--seed", seed, "random seed")->required();
  sim->add_option("--out,-o", out, "output file (default stdout)");

  // train
  auto* train = app.add_subcommand("train", "Select a representation, train, and save the model");
  std::string dataPath;
  PipelineFlags trainFlags;
  train->add_option("--data", dataPath, "labeled long CSV")->required()->check(CLI::ExistingFile);
  trainFlags.attach(train);
  train->add_option("--seed", seed, "random seed")->required();
  train->add_option("--out,-o", out, "model file")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "Label curves with a saved model");
  std::string modelPath;
  classify->add_option("--model", modelPath, "model file")->required()->check(CLI::ExistingFile);
  classify->add_option("--data", dataPath, "long CSV (labels ignored)")->required()->check(CLI::ExistingFile);
  classify->add_option("--out,-o", out, "output CSV (default stdout)");

  // loo
  auto* loo = app.add_subcommand("loo", "Leave-one-out error of the full pipeline");
  PipelineFlags looFlags;
  bool timings = false;
  loo->add_option("--data", dataPath, "labeled long CSV")->required()->check(CLI::ExistingFile);
  looFlags.attach(loo);
  loo->add_option("--seed", seed, "random seed")->required();
  loo->add_flag("--timings", timings, "include wall-clock timings in the report");
  loo->add_option("--out,-o", out, "JSON report (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Repeated train/test runs on simulated data");
  PipelineFlags benchFlags;
  fdd::SimulationBench sb;
  int benchModel = 1;
  bench->add_option("--model", benchModel, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  bench->add_option("--reps", sb.reps, "repetitions")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--train-per-class", sb.trainPerClass, "training curves per class")->capture_default_str();
  bench->add_option("--test-per-class", sb.testPerClass, "test curves per class")->capture_default_str();
  benchFlags.attach(bench);
  bench->add_option("--seed", seed, "random seed")->required();
  bench->add_flag("--timings", timings, "include wall-clock timings in the report");
  bench->add_option("--out,-o", out, "JSON report (default stdout)");

  // ddplot-export
  auto* dd = app.add_subcommand("ddplot-export", "Write the DD-plot of a dataset as CSV");
  std::string depthName = "mahalanobis";
  std::string pair = "2,1";
  std::string queryPath;
  int ddDirections = fdd::kDefaultDirections;
  dd->add_option("--data", dataPath, "labeled long CSV")->required()->check(CLI::ExistingFile);
  dd->add_option("--depth", depthName, "mahalanobis | spatial | projection")->capture_default_str();
  dd->add_option("--ls", pair, "L,S of the representation")->capture_default_str();
  dd->add_option("--query", queryPath, "additional curves to map (long CSV)")->check(CLI::ExistingFile);
  dd->add_option("--n-directions", ddDirections, "projection depth directions")->capture_default_str();
  dd->add_option("--seed", seed, "random seed")->required();
  dd->add_option("--out,-o", out, "output CSV (default stdout)");

  // select-report
  auto* rep = app.add_subcommand("select-report", "Per-(L,S) screening and cross-validation table");
  PipelineFlags repFlags;
  rep->add_option("--data", dataPath, "labeled long CSV")->required()->check(CLI::ExistingFile);
  repFlags.attach(rep);
  rep->add_option("--seed", seed, "random seed")->required();
  rep->add_option("--out,-o", out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sim) {
      const fdd::FunctionalDataset data =
          simModel == 1 ? fdd::model1(simN, seed) : fdd::model2(simN, seed);
      std::ostringstream s;
      fdd::write_long_csv(s, data);
      emit(out, s.str());
    } else if (*train) {
      const fdd::FunctionalDataset data = require_labeled(dataPath);
      const fdd::TrainedPipeline model = fdd::train_pipeline(data, trainFlags.build(), seed);
      model.save(out);
      const auto& f = model.features();
      std::cerr << "selected " << fdd::describe_features(f);
      if (model.selection() && model.spec().selector != fdd::SelectorKind::Fixed)
        std::cerr << " (cv error " << model.selection()->cvError << ")";
      std::cerr << '\n';
    } else if (*classify) {
      const fdd::TrainedPipeline model = fdd::TrainedPipeline::load(modelPath);
      const fdd::FunctionalDataset data = fdd::load_dataset(dataPath);
      std::ostringstream s;
      s << "id,label\n";
      for (std::size_t i = 0; i < data.size(); ++i) s << data.ids()[i] << ',' << model.classify(data.raw()[i]) << '\n';
      emit(out, s.str());
    } else if (*loo) {
      const fdd::FunctionalDataset data = require_labeled(dataPath);
      const fdd::LooReport r = fdd::evaluate_loo(data, looFlags.build(), seed);
      nlohmann::json j = fdd::to_json(r, timings);
      j["spec"] = looFlags.build().to_json();
      j["seed"] = seed;
      emit(out, j.dump(2) + "\n");
    } else if (*bench) {
      sb.model = benchModel == 1 ? fdd::SimModel::Model1 : fdd::SimModel::Model2;
      const fdd::PipelineSpec spec = benchFlags.build();
      const fdd::SimulationReport r = fdd::run_simulation_bench(sb, spec, seed);
      nlohmann::json j = fdd::to_json(r, timings);
      j["spec"] = spec.to_json();
      j["seed"] = seed;
      j["model"] = benchModel;
      j["reps"] = sb.reps;
      emit(out, j.dump(2) + "\n");
    } else if (*dd) {
      const fdd::FunctionalDataset data = require_labeled(dataPath);
      const fdd::FeatureSpec features{PipelineFlags::parse_pair(pair), {}};
      features.ls->validate();
      const fdd::Matrix x = features.apply(data);
      const auto labels = data.labels();
      auto [c0, c1] = fdd::split_by_class(x, labels);
      fdd::Matrix q;
      if (!queryPath.empty()) {
        const fdd::FunctionalDataset query = fdd::load_dataset(queryPath);
        q.resize(static_cast<Eigen::Index>(query.size()), features.dim());
        for (std::size_t i = 0; i < query.size(); ++i)
          q.row(static_cast<Eigen::Index>(i)) =
              features.apply(fdd::interpolate_on_axis(query.raw()[i], data.time_offset(), data.domain_end()),
                             data.domain_end())
                  .transpose();
      }
      const fdd::DDTransform t = fdd::dd_transform(c0, c1, q, fdd::parse_depth_kind(depthName), seed, ddDirections);
      std::vector<fdd::DDPoint> all = t.training;
      all.insert(all.end(), t.query.begin(), t.query.end());
      std::ostringstream s;
      fdd::write_ddplot_csv(s, all);
      emit(out, s.str());
    } else if (*rep) {
      const fdd::FunctionalDataset data = require_labeled(dataPath);
      const fdd::PipelineSpec spec = repFlags.build();
      if (spec.selector != fdd::SelectorKind::VCcrossLS && spec.selector != fdd::SelectorKind::CrossLS)
        throw fdd::InvalidConfig("select-report needs --selector vccrossls or crossls");
      const fdd::SelectionOutcome sel = fdd::select_representation(data, spec, seed);
      std::ostringstream s;
      fdd::write_selection_csv(s, sel.scores);
      emit(out, s.str());
    }
  } catch (const fdd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const fdd::Incompatible& e) {
    std::cerr << "incompatible model: " << e.what() << '\n';
    return kIncompatible;
  } catch (const fdd::SingularScatter& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const fdd::DegenerateData& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const fdd::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
