#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fastdd/depth.hpp"
#include "fastdd/fdata.hpp"
#include "fastdd/ls_transform.hpp"
#include "fastdd/stats.hpp"

namespace fdd {

enum class ClassifierKind { Lda, Qda, Knn, MaxDepth, DDkNN, DDAlpha };

std::string_view to_string(ClassifierKind kind);
/// Accepts lda, qda, knn, md, ddknn, ddalpha.
ClassifierKind parse_classifier_kind(std::string_view name);
bool requires_depth(ClassifierKind kind);

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::Lda;
  std::optional<DepthKind> depth;
  int nDirections = kDefaultDirections;
  int maxDegree = 3;  // DD-alpha only
  int folds = 10;     // DD-alpha degree selection

  /// Depth is required exactly for md, ddknn and ddalpha.
  void validate() const;
};

/// A trained two-class rule on points of a fixed dimension.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual ClassifierKind kind() const = 0;
  virtual int dim() const = 0;
  virtual Label classify(const Vector& y) const = 0;
  virtual nlohmann::json to_json() const = 0;

  std::vector<Label> classify_all(const Matrix& points) const;
};

std::unique_ptr<Classifier> fit_classifier(const ClassifierSpec& spec, const Matrix& points,
                                           std::span<const Label> labels, std::uint64_t seed);
std::unique_ptr<Classifier> classifier_from_json(const nlohmann::json& j);

/// Classifier behind an optional principal-component reduction. The
/// reduction is applied when the pooled covariance is ill-conditioned, or
/// when the classifier cannot invert a scatter matrix in the full space.
class FeatureModel {
 public:
  FeatureModel(std::optional<PcaMap> pca, std::shared_ptr<const Classifier> classifier);

  const std::optional<PcaMap>& pca() const noexcept { return pca_; }
  const Classifier& classifier() const noexcept { return *classifier_; }

  Label classify(const Vector& y) const;
  std::vector<Label> classify_all(const Matrix& points) const;

  nlohmann::json to_json() const;
  static FeatureModel from_json(const nlohmann::json& j);

 private:
  std::optional<PcaMap> pca_;
  std::shared_ptr<const Classifier> classifier_;
};

FeatureModel fit_feature_model(const ClassifierSpec& spec, const Matrix& points, std::span<const Label> labels,
                               std::uint64_t seed);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace fdd
