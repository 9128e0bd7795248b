#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fastdd/bench.hpp"
#include "fastdd/depth.hpp"
#include "fastdd/error.hpp"
#include "fastdd/io.hpp"
#include "fastdd/ls_transform.hpp"
#include "fastdd/model_select.hpp"
#include "fastdd/pipeline.hpp"
#include "fastdd/simulate.hpp"

namespace py = pybind11;
using namespace fdd;

namespace {

FunctionalDataset make_dataset(const std::vector<std::vector<double>>& times,
                               const std::vector<std::vector<double>>& values,
                               const std::optional<std::vector<int>>& labels,
                               const std::vector<std::string>& ids) {
  if (times.size() != values.size()) throw InvalidInput("times and values differ in length");
  if (labels && labels->size() != times.size()) throw InvalidInput("labels and curves differ in length");
  std::vector<DiscretizedFunction> obs;
  for (std::size_t i = 0; i < times.size(); ++i) {
    DiscretizedFunction f{times[i], values[i], std::nullopt};
    if (labels) f.label = static_cast<Label>((*labels)[i]);
    obs.push_back(std::move(f));
  }
  return FunctionalDataset::from_observations(std::move(obs), ids);
}

PipelineSpec make_spec(const std::string& selector, const std::string& classifier, const std::optional<std::string>& depth,
                       std::pair<int, int> fixed, int folds, int nDirections, int maxDegree) {
  PipelineSpec s;
  s.selector = parse_selector_kind(selector);
  s.classifier.kind = parse_classifier_kind(classifier);
  if (depth) s.classifier.depth = parse_depth_kind(*depth);
  s.fixed = {fixed.first, fixed.second};
  s.folds = folds;
  s.classifier.folds = folds;
  s.classifier.nDirections = nDirections;
  s.classifier.maxDegree = maxDegree;
  s.validate();
  return s;
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_fastdd, m) {
  m.doc() = "Depth-based classification of functional data";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<Incompatible>(m, "IncompatibleModel", base.ptr());
  py::register_exception<SingularScatter>(m, "SingularScatter", base.ptr());
  py::register_exception<DegenerateData>(m, "DegenerateData", base.ptr());
  py::register_exception<InvalidConfig>(m, "InvalidConfig", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());

  py::class_<FunctionalDataset>(m, "Dataset")
      .def(py::init(&make_dataset), py::arg("times"), py::arg("values"), py::arg("labels") = std::nullopt,
           py::arg("ids") = std::vector<std::string>{})
      .def("__len__", &FunctionalDataset::size)
      .def_property_readonly("ids", &FunctionalDataset::ids)
      .def_property_readonly("labels", [](const FunctionalDataset& d) {
        std::vector<int> out;
        for (Label l : d.labels()) out.push_back(l);
        return out;
      })
      .def_property_readonly("domain_end", &FunctionalDataset::domain_end)
      .def_property_readonly("time_offset", &FunctionalDataset::time_offset)
      .def("curve", [](const FunctionalDataset& d, std::size_t i) {
        if (i >= d.size()) throw py::index_error();
        return py::make_tuple(d.raw()[i].times, d.raw()[i].values);
      })
      .def("save", [](const FunctionalDataset& d, const std::filesystem::path& p) { save_dataset(p, d); });

  m.def("load_dataset", &load_dataset, py::arg("path"));
  py::class_<OUNoiseSpec>(m, "NoiseSpec")
      .def(py::init<>())
      .def_readwrite("variance", &OUNoiseSpec::variance)
      .def_readwrite("rate", &OUNoiseSpec::lengthScaleInv)
      .def_readwrite("grid_size", &OUNoiseSpec::gridSize);
  m.def("model1", &model1, py::arg("n_per_class"), py::arg("seed"), py::arg("noise") = OUNoiseSpec{});
  m.def("model2", &model2, py::arg("n_per_class"), py::arg("seed"), py::arg("noise") = OUNoiseSpec{});

  m.def("ls_transform",
        [](const FunctionalDataset& d, int L, int S) { return ls_transform(d, LSConfig{L, S}); },
        py::arg("data"), py::arg("L"), py::arg("S"));

  m.def("depth",
        [](const Matrix& sample, const Matrix& points, const std::string& kind, int nDirections, std::uint64_t seed) {
          const DepthModel model = fit_depth(sample, parse_depth_kind(kind), nDirections, seed);
          Vector out(points.rows());
          for (Eigen::Index i = 0; i < points.rows(); ++i) out(i) = model.depth(points.row(i).transpose());
          return out;
        },
        py::arg("sample"), py::arg("points"), py::arg("kind") = "mahalanobis",
        py::arg("n_directions") = kDefaultDirections, py::arg("seed") = 0);

  m.def("vc_bound", &vc_bound, py::arg("epsilon"), py::arg("m"), py::arg("n"), py::arg("L"), py::arg("S"));
  m.def("count_separations",
        [](long long n, long long d) { return py::int_(py::str(count_separations(n, d).str())); },
        py::arg("n"), py::arg("d"));

  py::class_<TrainedPipeline>(m, "Model")
      .def("classify", [](const TrainedPipeline& p, const FunctionalDataset& d) {
        std::vector<int> out;
        for (const auto& f : d.raw()) out.push_back(p.classify(f));
        return out;
      })
      .def_property_readonly("representation", [](const TrainedPipeline& p) { return describe_features(p.features()); })
      .def("to_json", [](const TrainedPipeline& p) { return to_python(p.to_json()); })
      .def("save", &TrainedPipeline::save)
      .def_static("load", &TrainedPipeline::load);

  m.def("train",
        [](const FunctionalDataset& d, std::uint64_t seed, const std::string& selector, const std::string& classifier,
           const std::optional<std::string>& depth, std::pair<int, int> fixed, int folds, int nDirections,
           int maxDegree) {
          return train_pipeline(d, make_spec(selector, classifier, depth, fixed, folds, nDirections, maxDegree), seed);
        },
        py::arg("data"), py::arg("seed"), py::arg("selector") = "vccrossls", py::arg("classifier") = "ddalpha",
        py::arg("depth") = std::optional<std::string>("mahalanobis"), py::arg("fixed") = std::pair{2, 1},
        py::arg("folds") = 10, py::arg("n_directions") = kDefaultDirections, py::arg("max_degree") = 3,
        py::call_guard<py::gil_scoped_release>());

  m.def("loo",
        [](const FunctionalDataset& d, std::uint64_t seed, const std::string& selector, const std::string& classifier,
           const std::optional<std::string>& depth, std::pair<int, int> fixed, int folds) {
          LooReport r;
          {
            py::gil_scoped_release release;
            r = evaluate_loo(d, make_spec(selector, classifier, depth, fixed, folds, kDefaultDirections, 3), seed);
          }
          return to_python(to_json(r, true));
        },
        py::arg("data"), py::arg("seed"), py::arg("selector") = "vccrossls", py::arg("classifier") = "ddalpha",
        py::arg("depth") = std::optional<std::string>("mahalanobis"), py::arg("fixed") = std::pair{2, 1},
        py::arg("folds") = 10);
}
