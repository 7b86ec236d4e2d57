#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "nagasent/cli.hpp"
#include "nagasent/error.hpp"
#include "nagasent/eval.hpp"
#include "nagasent/features.hpp"
#include "nagasent/model_io.hpp"
#include "nagasent/synthetic.hpp"

namespace py = pybind11;
using namespace nagasent;

namespace {

FeatureSetChoice choice_of(const std::string& s) {
  const auto c = parse_feature_set(s);
  if (!c) throw InputError("unknown feature set '" + s + "'");
  return *c;
}

std::string_view kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::word: return "word";
    case TokenKind::emoticon_positive: return "emoticon_positive";
    case TokenKind::emoticon_negative: return "emoticon_negative";
    case TokenKind::exclamation: return "exclamation";
    case TokenKind::question: return "question";
    case TokenKind::other_punct: return "other_punct";
  }
  return "other_punct";
}

py::list scores_list(const std::vector<LabelScore>& scores) {
  py::list out;
  for (const auto& s : scores) out.append(py::make_tuple(s.label, s.score, s.margin));
  return out;
}

// Lexicons plus the feature layout used to turn text into model rows.
struct Featurizer {
  PolarityLexicon polarity;
  IntensityLexicon intensity;

  std::vector<double> row(const std::string& text, FeatureSetChoice choice) const {
    return project(extract(tokenize(text), polarity, intensity), choice);
  }
};

SvmConfig svm_config(const std::string& kernel, double c, int degree, std::optional<double> gamma,
                     double coef0, double tol, std::int64_t max_iter, std::uint64_t seed) {
  SvmConfig cfg;
  const auto k = parse_kernel(kernel);
  if (!k) throw InputError("unknown kernel '" + kernel + "'");
  cfg.kernel = *k;
  cfg.c_penalty = c;
  cfg.degree = degree;
  cfg.gamma = gamma;
  cfg.coef0 = coef0;
  cfg.tol = tol;
  cfg.max_iterations = max_iter;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lexicon features, naive Bayes and SVM classifiers for Nagamese sentiment";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputeError>(m, "ComputeError", PyExc_RuntimeError);

  m.def("normalize", &normalize, py::arg("text"));
  m.def(
      "tokenize",
      [](const std::string& text) {
        py::list out;
        for (const auto& t : tokenize(text)) out.append(py::make_tuple(t.surface, kind_name(t.kind)));
        return out;
      },
      py::arg("text"), "List of (surface, kind) pairs.");
  m.def("feature_names", [](const std::string& feature_set) {
    std::vector<std::string> out;
    for (auto n : feature_names(choice_of(feature_set))) out.emplace_back(n);
    return out;
  }, py::arg("feature_set") = "full");

  py::class_<Featurizer>(m, "Featurizer")
      .def(py::init([](const std::filesystem::path& lexicon, const std::filesystem::path& intensity) {
             return Featurizer{load_polarity_lexicon(lexicon), load_intensity_lexicon(intensity)};
           }),
           py::arg("lexicon"), py::arg("intensity"))
      .def("features", [](const Featurizer& f, const std::string& text,
                          const std::string& feature_set) { return f.row(text, choice_of(feature_set)); },
           py::arg("text"), py::arg("feature_set") = "best")
      .def("lexicon_stats", [](const Featurizer& f) {
        std::map<std::string, std::size_t> out;
        for (const auto& [p, c] : lexicon_stats(f.polarity)) out[std::string(to_string(p))] = c;
        return out;
      });

  py::class_<ModelBundle>(m, "Model")
      .def_static("load", &load_model, py::arg("path"))
      .def_static("from_json", &model_from_json, py::arg("text"))
      .def("save", [](const ModelBundle& b, const std::filesystem::path& p) { save_model(b, p); },
           py::arg("path"))
      .def("to_json", &model_to_json)
      .def_property_readonly("kind", [](const ModelBundle& b) { return std::string(b.kind()); })
      .def_property_readonly("labels", &ModelBundle::labels)
      .def_property_readonly("task", [](const ModelBundle& b) { return b.task; })
      .def_property_readonly("feature_set",
                             [](const ModelBundle& b) { return std::string(to_string(b.feature_set)); })
      .def_property_readonly("feature_count", &ModelBundle::feature_count)
      .def("predict_row", [](const ModelBundle& b, const std::vector<double>& row) {
        return scores_list(predict(b, row));
      }, py::arg("row"), "Ranked (label, score, margin) tuples for one feature row.")
      .def("predict", [](const ModelBundle& b, const Featurizer& f, const std::string& text) {
        return scores_list(predict(b, f.row(text, b.feature_set)));
      }, py::arg("featurizer"), py::arg("text"));

  m.def(
      "train_nb",
      [](const std::vector<std::vector<double>>& rows, const std::vector<std::string>& labels,
         const std::string& feature_set, const std::string& task) {
        return ModelBundle{nb_fit(Matrix::from_rows(rows), labels), choice_of(feature_set), task,
                           std::nullopt};
      },
      py::arg("rows"), py::arg("labels"), py::arg("feature_set") = "best",
      py::arg("task") = "polarity");
  m.def(
      "train_svm",
      [](const std::vector<std::vector<double>>& rows, const std::vector<std::string>& labels,
         const std::string& kernel, double c, int degree, std::optional<double> gamma, double coef0,
         double tol, std::int64_t max_iter, std::uint64_t seed, const std::string& feature_set,
         const std::string& task) {
        const SvmConfig cfg = svm_config(kernel, c, degree, gamma, coef0, tol, max_iter, seed);
        Matrix x = Matrix::from_rows(rows);
        py::gil_scoped_release release;
        return ModelBundle{svm_fit(x, labels, cfg), choice_of(feature_set), task, std::nullopt};
      },
      py::arg("rows"), py::arg("labels"), py::arg("kernel") = "rbf", py::arg("C") = 1.0,
      py::arg("degree") = 3, py::arg("gamma") = py::none(), py::arg("coef0") = 0.0,
      py::arg("tol") = 1e-3, py::arg("max_iter") = -1, py::arg("seed") = 0,
      py::arg("feature_set") = "best", py::arg("task") = "polarity");

  m.def(
      "metrics",
      [](const std::vector<std::string>& actual, const std::vector<std::string>& predicted,
         const std::vector<std::string>& labels) {
        return py::module_::import("json").attr("loads")(
            report_to_json(metrics(confusion(actual, predicted, labels))));
      },
      py::arg("actual"), py::arg("predicted"), py::arg("labels"),
      "Accuracy, per-class precision/recall/f1 and the confusion matrix as a dict.");

  m.def(
      "generate_synthetic",
      [](const std::filesystem::path& lexicon, std::size_t n, std::uint64_t seed) {
        const auto s = generate_synthetic_corpus(load_polarity_lexicon(lexicon), n, seed);
        py::list out;
        for (const auto& r : s.corpus.records()) {
          py::dict d;
          d["id"] = r.id;
          d["text"] = r.text;
          d["polarity"] = std::string(to_string(*r.polarity));
          d["emotion"] = std::string(to_string(*r.emotion));
          out.append(d);
        }
        return out;
      },
      py::arg("lexicon"), py::arg("n") = 594, py::arg("seed") = 42);

  m.def(
      "run",
      [](std::vector<std::string> args, const std::string& stdin_text) {
        args.insert(args.begin(), "nagasent");
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Runs a command-line invocation in process; returns (exit_code, stdout, stderr).");
}
