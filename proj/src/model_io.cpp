#include "nagasent/model_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nagasent/error.hpp"

namespace nagasent {
namespace {

using nlohmann::json;

json matrix_json(const Matrix& m) { return m.to_rows(); }

Matrix matrix_from(const json& j, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& row : j) {
    const auto values = row.get<std::vector<double>>();
    if (values.size() != cols) throw InputError("matrix row has wrong length");
    m.append_row(values);
  }
  return m;
}

json config_json(const SvmConfig& c) {
  return {{"c_penalty", c.c_penalty},
          {"kernel", to_string(c.kernel)},
          {"degree", c.degree},
          {"gamma", c.gamma ? json(*c.gamma) : json(nullptr)},
          {"coef0", c.coef0},
          {"tol", c.tol},
          {"max_iterations", c.max_iterations},
          {"seed", c.seed}};
}

SvmConfig config_from(const json& j) {
  SvmConfig c;
  c.c_penalty = j.at("c_penalty").get<double>();
  const auto kernel = parse_kernel(j.at("kernel").get<std::string>());
  if (!kernel) throw InputError("unknown kernel in model file");
  c.kernel = *kernel;
  c.degree = j.at("degree").get<int>();
  if (!j.at("gamma").is_null()) c.gamma = j.at("gamma").get<double>();
  c.coef0 = j.at("coef0").get<double>();
  c.tol = j.at("tol").get<double>();
  c.max_iterations = j.at("max_iterations").get<std::int64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.validate();
  return c;
}

void require(bool ok, const char* what) {
  if (!ok) throw InputError(std::string("corrupt model: ") + what);
}

}  // namespace

std::size_t ModelBundle::feature_count() const {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, NbModel>) {
          return m.feature_count();
        } else {
          return m.feature_count;
        }
      },
      model);
}

const std::vector<std::string>& ModelBundle::labels() const {
  return std::visit([](const auto& m) -> const std::vector<std::string>& { return m.labels; },
                    model);
}

std::string_view ModelBundle::kind() const {
  return std::holds_alternative<NbModel>(model) ? "nb" : "svm";
}

std::vector<LabelScore> predict(const ModelBundle& bundle, std::span<const double> row) {
  if (row.size() != bundle.feature_count()) {
    throw InputError("feature dimension mismatch: got " + std::to_string(row.size()) +
                     ", model expects " + std::to_string(bundle.feature_count()));
  }
  std::vector<double> scaled;
  if (bundle.scaler) {
    scaled = bundle.scaler->transform(row);
    row = scaled;
  }
  if (const auto* nb = std::get_if<NbModel>(&bundle.model)) return nb_predict(*nb, row);
  return svm_predict(std::get<SvmModel>(bundle.model), row);
}

std::string model_to_json(const ModelBundle& bundle) {
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["model_kind"] = bundle.kind();
  doc["labels"] = bundle.labels();
  doc["feature_count"] = bundle.feature_count();
  doc["feature_set_choice"] = to_string(bundle.feature_set);
  doc["task"] = bundle.task;
  doc["scaler"] = bundle.scaler ? json{{"mean", bundle.scaler->mean}, {"scale", bundle.scaler->scale}}
                                : json(nullptr);
  if (const auto* nb = std::get_if<NbModel>(&bundle.model)) {
    doc["nb"] = {{"priors", nb->priors},
                 {"means", matrix_json(nb->means)},
                 {"variances", matrix_json(nb->variances)},
                 {"var_epsilon", nb->var_epsilon}};
  } else {
    const auto& svm = std::get<SvmModel>(bundle.model);
    json pairs = json::array();
    for (const auto& p : svm.pairs) {
      pairs.push_back({{"positive", p.positive},
                       {"negative", p.negative},
                       {"intercept", p.machine.intercept},
                       {"dual_coef", p.machine.dual_coef},
                       {"support_vectors", matrix_json(p.machine.support_vectors)}});
    }
    doc["svm"] = {{"config", config_json(svm.config)}, {"pairs", std::move(pairs)}};
  }
  return doc.dump(1);
}

ModelBundle model_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw InputError("unsupported model format_version " + std::to_string(version) +
                       " (expected " + std::to_string(kModelFormatVersion) + ")");
    }
    ModelBundle bundle;
    const auto labels = doc.at("labels").get<std::vector<std::string>>();
    const auto d = doc.at("feature_count").get<std::size_t>();
    const auto choice = parse_feature_set(doc.at("feature_set_choice").get<std::string>());
    require(choice.has_value(), "unknown feature_set_choice");
    bundle.feature_set = *choice;
    bundle.task = doc.at("task").get<std::string>();
    require(labels.size() >= 2, "fewer than two labels");
    if (!doc.at("scaler").is_null()) {
      Standardizer s;
      s.mean = doc["scaler"].at("mean").get<std::vector<double>>();
      s.scale = doc["scaler"].at("scale").get<std::vector<double>>();
      require(s.mean.size() == d && s.scale.size() == d, "scaler dimension");
      bundle.scaler = std::move(s);
    }

    const auto kind = doc.at("model_kind").get<std::string>();
    if (kind == "nb") {
      const json& j = doc.at("nb");
      NbModel nb;
      nb.labels = labels;
      nb.priors = j.at("priors").get<std::vector<double>>();
      nb.means = matrix_from(j.at("means"), d);
      nb.variances = matrix_from(j.at("variances"), d);
      nb.var_epsilon = j.at("var_epsilon").get<double>();
      require(nb.priors.size() == labels.size(), "priors length");
      require(nb.means.rows() == labels.size() && nb.variances.rows() == labels.size(),
              "parameter rows");
      for (double v : nb.variances.data()) require(v > 0.0, "non-positive variance");
      bundle.model = std::move(nb);
    } else if (kind == "svm") {
      const json& j = doc.at("svm");
      SvmModel svm;
      svm.labels = labels;
      svm.feature_count = d;
      svm.config = config_from(j.at("config"));
      for (const auto& p : j.at("pairs")) {
        SvmPairModel pm;
        pm.positive = p.at("positive").get<std::size_t>();
        pm.negative = p.at("negative").get<std::size_t>();
        require(pm.positive < labels.size() && pm.negative < labels.size(), "pair label index");
        pm.machine.intercept = p.at("intercept").get<double>();
        pm.machine.dual_coef = p.at("dual_coef").get<std::vector<double>>();
        pm.machine.support_vectors = matrix_from(p.at("support_vectors"), d);
        require(pm.machine.dual_coef.size() == pm.machine.support_vectors.rows(),
                "support vector count");
        svm.pairs.push_back(std::move(pm));
      }
      require(!svm.pairs.empty(), "no pairwise machines");
      bundle.model = std::move(svm);
    } else {
      throw InputError("unknown model_kind '" + kind + "'");
    }
    return bundle;
  } catch (const json::exception& e) {
    throw InputError(std::string("corrupt model: ") + e.what());
  }
}

void save_model(const ModelBundle& bundle, const std::filesystem::path& path) {
  const std::string text = model_to_json(bundle);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write model file " + path.string());
  out << text << '\n';
  if (!out) throw InputError("write failed for " + path.string());
}

ModelBundle load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return model_from_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace nagasent
