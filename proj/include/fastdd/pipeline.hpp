#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fastdd/classifier.hpp"
#include "fastdd/fdata.hpp"
#include "fastdd/model_select.hpp"

namespace fdd {

enum class SelectorKind { VCcrossLS, CrossLS, CrossDHB, Fixed };

std::string_view to_string(SelectorKind kind);
/// Accepts vccrossls, crossls, crossdhb, fixed.
SelectorKind parse_selector_kind(std::string_view name);

struct PipelineSpec {
  SelectorKind selector = SelectorKind::VCcrossLS;
  LSConfig fixed{2, 1};  // used by SelectorKind::Fixed
  ClassifierSpec classifier;
  int folds = 10;
  bool capL = false;

  void validate() const;
  nlohmann::json to_json() const;
  static PipelineSpec from_json(const nlohmann::json& j);
};

inline constexpr int kModelFormatVersion = 1;

/// Representation, classifier, and the training time axis.
class TrainedPipeline {
 public:
  TrainedPipeline(PipelineSpec spec, FeatureSpec features, FeatureModel model, double timeOffset, double domainEnd,
                  std::uint64_t seed);

  const PipelineSpec& spec() const noexcept { return spec_; }
  const FeatureSpec& features() const noexcept { return features_; }
  const FeatureModel& model() const noexcept { return model_; }
  double time_offset() const noexcept { return timeOffset_; }
  double domain_end() const noexcept { return domainEnd_; }
  std::uint64_t seed() const noexcept { return seed_; }
  /// Present when the pipeline was trained in this process.
  const std::optional<SelectionOutcome>& selection() const noexcept { return selection_; }
  void set_selection(SelectionOutcome s) { selection_ = std::move(s); }

  /// Curve given on the original (unshifted) time axis.
  Label classify(const DiscretizedFunction& f) const;
  /// Finite-dimensional representation of a curve.
  Vector represent(const DiscretizedFunction& f) const;

  nlohmann::json to_json() const;
  /// Throws Incompatible on a wrong format version or a malformed record.
  static TrainedPipeline from_json(const nlohmann::json& j);

  void save(const std::filesystem::path& path) const;
  static TrainedPipeline load(const std::filesystem::path& path);

 private:
  PipelineSpec spec_;
  FeatureSpec features_;
  FeatureModel model_;
  double timeOffset_;
  double domainEnd_;
  std::uint64_t seed_;
  std::optional<SelectionOutcome> selection_;
};

/// Runs the selector and trains the classifier on the selected representation.
TrainedPipeline train_pipeline(const FunctionalDataset& data, const PipelineSpec& spec, std::uint64_t seed);

/// Selection step only.
SelectionOutcome select_representation(const FunctionalDataset& data, const PipelineSpec& spec, std::uint64_t seed);

struct LooReport {
  std::size_t n = 0;
  std::size_t errors = 0;
  double errorRate = 0.0;
  double meanTrainSeconds = 0.0;
  double meanClassifySeconds = 0.0;
  double meanCvIterations = 0.0;
  std::vector<Label> predictions;
  std::vector<std::string> selections;  // representation chosen in each run
};

/// Leave-one-out estimate of the error of the full selection and training
/// procedure.
LooReport evaluate_loo(const FunctionalDataset& data, const PipelineSpec& spec, std::uint64_t seed);

}  // namespace fdd
