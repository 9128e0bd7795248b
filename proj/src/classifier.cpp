#include "fastdd/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "fastdd/alpha_procedure.hpp"
#include "fastdd/baseline.hpp"
#include "fastdd/ddplot.hpp"
#include "fastdd/error.hpp"
#include "fastdd/seed.hpp"

namespace fdd {

using nlohmann::json;

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::Lda: return "lda";
    case ClassifierKind::Qda: return "qda";
    case ClassifierKind::Knn: return "knn";
    case ClassifierKind::MaxDepth: return "md";
    case ClassifierKind::DDkNN: return "ddknn";
    case ClassifierKind::DDAlpha: return "ddalpha";
  }
  return "?";
}

ClassifierKind parse_classifier_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "lda") return ClassifierKind::Lda;
  if (s == "qda") return ClassifierKind::Qda;
  if (s == "knn") return ClassifierKind::Knn;
  if (s == "md" || s == "maxdepth") return ClassifierKind::MaxDepth;
  if (s == "ddknn") return ClassifierKind::DDkNN;
  if (s == "ddalpha") return ClassifierKind::DDAlpha;
  throw InvalidConfig("unknown classifier '" + s + "'");
}

bool requires_depth(ClassifierKind kind) {
  return kind == ClassifierKind::MaxDepth || kind == ClassifierKind::DDkNN || kind == ClassifierKind::DDAlpha;
}

void ClassifierSpec::validate() const {
  if (requires_depth(kind) != depth.has_value())
    throw InvalidConfig(requires_depth(kind) ? "classifier '" + std::string(to_string(kind)) + "' needs a depth"
                                             : "classifier '" + std::string(to_string(kind)) + "' takes no depth");
  if (nDirections < 1) throw InvalidConfig("number of projection directions must be positive");
  if (maxDegree < 1 || maxDegree > 3) throw InvalidConfig("DD-alpha maximum degree must be 1, 2 or 3");
  if (folds < 2) throw InvalidConfig("cross-validation needs at least two folds");
}

std::vector<Label> Classifier::classify_all(const Matrix& points) const {
  std::vector<Label> out(static_cast<std::size_t>(points.rows()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) out[static_cast<std::size_t>(i)] = classify(points.row(i).transpose());
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const auto r = j.at("rows").get<Eigen::Index>();
  const auto c = j.at("cols").get<Eigen::Index>();
  const json& data = j.at("data");
  if (r < 0 || c < 0 || static_cast<Eigen::Index>(data.size()) != r) throw Incompatible("matrix shape mismatch");
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const json& row = data.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != c) throw Incompatible("matrix shape mismatch");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
  return m;
}

json vector_to_json(const Vector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Vector vector_from_json(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

namespace {

json depth_model_to_json(const DepthModel& m) {
  json j{{"kind", to_string(m.kind())}, {"sample", matrix_to_json(m.sample())}};
  if (m.kind() == DepthKind::Projection) j["directions"] = matrix_to_json(m.directions());
  return j;
}

DepthModel depth_model_from_json(const json& j) {
  const DepthKind kind = parse_depth_kind(j.at("kind").get<std::string>());
  Matrix dirs = kind == DepthKind::Projection ? matrix_from_json(j.at("directions")) : Matrix();
  return fit_depth_with_directions(matrix_from_json(j.at("sample")), kind, std::move(dirs));
}

json dd_map_to_json(const DDMap& map) {
  return json{{"class0", depth_model_to_json(map.class0())}, {"class1", depth_model_to_json(map.class1())}};
}

DDMap dd_map_from_json(const json& j) {
  return DDMap(depth_model_from_json(j.at("class0")), depth_model_from_json(j.at("class1")));
}

class DiscriminantClassifier final : public Classifier {
 public:
  DiscriminantClassifier(ClassifierKind kind, DiscriminantModel model) : kind_(kind), model_(std::move(model)) {}
  ClassifierKind kind() const override { return kind_; }
  int dim() const override { return static_cast<int>(model_.moments().mean[0].size()); }
  Label classify(const Vector& y) const override { return model_.classify(y); }
  json to_json() const override {
    const auto& g = model_.moments();
    json j{{"kind", to_string(kind_)},
           {"shared", model_.shared_covariance()},
           {"prior", {g.prior[0], g.prior[1]}},
           {"mean", {vector_to_json(g.mean[0]), vector_to_json(g.mean[1])}},
           {"cov", {matrix_to_json(g.cov[0]), matrix_to_json(g.cov[1])}},
           {"pooled", matrix_to_json(g.pooled)}};
    return j;
  }
  static std::unique_ptr<Classifier> from_json(ClassifierKind kind, const json& j) {
    GaussianClassModel g;
    for (std::size_t c = 0; c < 2; ++c) {
      g.prior[c] = j.at("prior").at(c).get<double>();
      g.mean[c] = vector_from_json(j.at("mean").at(c));
      g.cov[c] = matrix_from_json(j.at("cov").at(c));
    }
    g.pooled = matrix_from_json(j.at("pooled"));
    return std::make_unique<DiscriminantClassifier>(kind, DiscriminantModel(std::move(g), j.at("shared").get<bool>()));
  }

 private:
  ClassifierKind kind_;
  DiscriminantModel model_;
};

class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(AffineKnnModel model) : model_(std::move(model)) {}
  ClassifierKind kind() const override { return ClassifierKind::Knn; }
  int dim() const override { return static_cast<int>(model_.training().cols()); }
  Label classify(const Vector& y) const override { return model_.classify(y); }
  json to_json() const override {
    return json{{"kind", "knn"},
                {"k", model_.k()},
                {"training", matrix_to_json(model_.training())},
                {"labels", std::vector<Label>(model_.labels().begin(), model_.labels().end())},
                {"whitening", matrix_to_json(model_.whitening())}};
  }
  static std::unique_ptr<Classifier> from_json(const json& j) {
    return std::make_unique<KnnClassifier>(AffineKnnModel(matrix_from_json(j.at("training")),
                                                          j.at("labels").get<std::vector<Label>>(),
                                                          matrix_from_json(j.at("whitening")), j.at("k").get<int>()));
  }

 private:
  AffineKnnModel model_;
};

class MaxDepthClassifier final : public Classifier {
 public:
  explicit MaxDepthClassifier(MaxDepthModel model) : model_(std::move(model)) {}
  ClassifierKind kind() const override { return ClassifierKind::MaxDepth; }
  int dim() const override { return model_.map().class0().dim(); }
  Label classify(const Vector& y) const override { return model_.classify(y); }
  json to_json() const override {
    return json{{"kind", "md"}, {"prior", {model_.prior()[0], model_.prior()[1]}}, {"map", dd_map_to_json(model_.map())}};
  }
  static std::unique_ptr<Classifier> from_json(const json& j) {
    std::array<double, 2> prior{j.at("prior").at(0).get<double>(), j.at("prior").at(1).get<double>()};
    return std::make_unique<MaxDepthClassifier>(MaxDepthModel(dd_map_from_json(j.at("map")), prior));
  }

 private:
  MaxDepthModel model_;
};

json dd_points_to_json(const std::vector<DDPoint>& pts) {
  json arr = json::array();
  for (const auto& z : pts) arr.push_back(json{z.z0, z.z1, z.label.value_or(-1)});
  return arr;
}

std::vector<DDPoint> dd_points_from_json(const json& j) {
  std::vector<DDPoint> out;
  for (const auto& e : j) {
    DDPoint z{e.at(0).get<double>(), e.at(1).get<double>(), {}};
    const int lab = e.at(2).get<int>();
    if (lab >= 0) z.label = lab;
    out.push_back(z);
  }
  return out;
}

class DDkNNClassifier final : public Classifier {
 public:
  DDkNNClassifier(DDMap map, DDkNNModel model) : map_(std::move(map)), model_(std::move(model)) {}
  ClassifierKind kind() const override { return ClassifierKind::DDkNN; }
  int dim() const override { return map_.class0().dim(); }
  Label classify(const Vector& y) const override { return classify_ddknn(model_, map_(y)); }
  json to_json() const override {
    return json{{"kind", "ddknn"}, {"map", dd_map_to_json(map_)}, {"k", model_.k}, {"training", dd_points_to_json(model_.training)}};
  }
  static std::unique_ptr<Classifier> from_json(const json& j) {
    return std::make_unique<DDkNNClassifier>(dd_map_from_json(j.at("map")),
                                             DDkNNModel{dd_points_from_json(j.at("training")), j.at("k").get<int>()});
  }

 private:
  DDMap map_;
  DDkNNModel model_;
};

class DDAlphaClassifier final : public Classifier {
 public:
  DDAlphaClassifier(DDMap map, DDAlphaModel model) : map_(std::move(map)), model_(std::move(model)) {}
  ClassifierKind kind() const override { return ClassifierKind::DDAlpha; }
  int dim() const override { return map_.class0().dim(); }
  Label classify(const Vector& y) const override { return classify_ddalpha(model_, map_(y)); }
  json to_json() const override {
    json exps = json::array();
    for (const auto& m : model_.featureExponents) exps.push_back({m.a, m.b});
    return json{{"kind", "ddalpha"},     {"map", dd_map_to_json(map_)},      {"degree", model_.degree},
                {"exponents", exps},     {"weights", vector_to_json(model_.weights)},
                {"zeroLabel", model_.zeroLabel}, {"riskPath", model_.riskPath}};
  }
  static std::unique_ptr<Classifier> from_json(const json& j) {
    DDAlphaModel m;
    m.degree = j.at("degree").get<int>();
    for (const auto& e : j.at("exponents")) m.featureExponents.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    m.weights = vector_from_json(j.at("weights"));
    m.zeroLabel = j.at("zeroLabel").get<int>();
    m.riskPath = j.at("riskPath").get<std::vector<double>>();
    if (static_cast<std::size_t>(m.weights.size()) != m.featureExponents.size())
      throw Incompatible("DD-alpha weights do not match its features");
    return std::make_unique<DDAlphaClassifier>(dd_map_from_json(j.at("map")), std::move(m));
  }

 private:
  DDMap map_;
  DDAlphaModel model_;
};

}  // namespace

std::unique_ptr<Classifier> fit_classifier(const ClassifierSpec& spec, const Matrix& points,
                                           std::span<const Label> labels, std::uint64_t seed) {
  spec.validate();
  if (static_cast<std::size_t>(points.rows()) != labels.size()) throw InvalidInput("points and labels differ in length");
  switch (spec.kind) {
    case ClassifierKind::Lda:
      return std::make_unique<DiscriminantClassifier>(spec.kind, fit_lda(points, labels));
    case ClassifierKind::Qda:
      return std::make_unique<DiscriminantClassifier>(spec.kind, fit_qda(points, labels));
    case ClassifierKind::Knn:
      return std::make_unique<KnnClassifier>(fit_affine_knn(points, labels));
    case ClassifierKind::MaxDepth:
      return std::make_unique<MaxDepthClassifier>(fit_maxdepth(points, labels, *spec.depth, seed, spec.nDirections));
    case ClassifierKind::DDkNN:
    case ClassifierKind::DDAlpha: {
      auto [c0, c1] = split_by_class(points, labels);
      if (c0.rows() < 2 || c1.rows() < 2) throw InvalidInput("DD-plot classifiers need at least two points per class");
      DDMap map = fit_dd_map(c0, c1, *spec.depth, derive_seed(seed, {0}), spec.nDirections);
      std::vector<DDPoint> dd = map.map(points);
      for (std::size_t i = 0; i < dd.size(); ++i) dd[i].label = labels[i];
      if (spec.kind == ClassifierKind::DDkNN)
        return std::make_unique<DDkNNClassifier>(std::move(map), fit_ddknn(std::move(dd)));
      return std::make_unique<DDAlphaClassifier>(std::move(map),
                                                 fit_ddalpha(dd, spec.maxDegree, spec.folds, derive_seed(seed, {1})));
    }
  }
  throw InvalidConfig("unknown classifier");
}

std::unique_ptr<Classifier> classifier_from_json(const json& j) {
  try {
    const ClassifierKind kind = parse_classifier_kind(j.at("kind").get<std::string>());
    switch (kind) {
      case ClassifierKind::Lda:
      case ClassifierKind::Qda: return DiscriminantClassifier::from_json(kind, j);
      case ClassifierKind::Knn: return KnnClassifier::from_json(j);
      case ClassifierKind::MaxDepth: return MaxDepthClassifier::from_json(j);
      case ClassifierKind::DDkNN: return DDkNNClassifier::from_json(j);
      case ClassifierKind::DDAlpha: return DDAlphaClassifier::from_json(j);
    }
  } catch (const json::exception& e) {
    throw Incompatible(std::string("malformed classifier record: ") + e.what());
  } catch (const InvalidConfig& e) {
    throw Incompatible(e.what());
  }
  throw Incompatible("unknown classifier kind");
}

FeatureModel::FeatureModel(std::optional<PcaMap> pca, std::shared_ptr<const Classifier> classifier)
    : pca_(std::move(pca)), classifier_(std::move(classifier)) {
  if (!classifier_) throw InvalidInput("feature model without classifier");
}

Label FeatureModel::classify(const Vector& y) const {
  return pca_ ? classifier_->classify(pca_->project(y)) : classifier_->classify(y);
}

std::vector<Label> FeatureModel::classify_all(const Matrix& points) const {
  return classifier_->classify_all(pca_ ? pca_->project(points) : points);
}

json FeatureModel::to_json() const {
  json j{{"classifier", classifier_->to_json()}};
  if (pca_) j["pca"] = json{{"center", vector_to_json(pca_->center())}, {"basis", matrix_to_json(pca_->basis())}};
  return j;
}

FeatureModel FeatureModel::from_json(const json& j) {
  std::optional<PcaMap> pca;
  try {
    if (j.contains("pca"))
      pca.emplace(vector_from_json(j.at("pca").at("center")), matrix_from_json(j.at("pca").at("basis")));
  } catch (const json::exception& e) {
    throw Incompatible(std::string("malformed PCA record: ") + e.what());
  }
  return FeatureModel(std::move(pca), classifier_from_json(j.at("classifier")));
}

FeatureModel fit_feature_model(const ClassifierSpec& spec, const Matrix& points, std::span<const Label> labels,
                               std::uint64_t seed) {
  if (!needs_pca_fallback(points)) {
    try {
      return FeatureModel(std::nullopt, fit_classifier(spec, points, labels, seed));
    } catch (const SingularScatter&) {
    }
  }
  PcaMap pca = fit_pca_fallback(points);
  std::shared_ptr<const Classifier> clf = fit_classifier(spec, pca.project(points), labels, seed);
  return FeatureModel(std::move(pca), std::move(clf));
}

}  // namespace fdd
