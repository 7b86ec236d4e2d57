#include "nagasent/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nagasent/error.hpp"

namespace nagasent {

NbModel nb_fit(const Matrix& matrix, std::span<const std::string> labels) {
  if (matrix.rows() != labels.size()) {
    throw InputError("nb_fit: " + std::to_string(matrix.rows()) + " rows but " +
                     std::to_string(labels.size()) + " labels");
  }
  if (matrix.empty() || matrix.cols() == 0) throw InputError("nb_fit: empty training matrix");

  NbModel model;
  model.labels.assign(labels.begin(), labels.end());
  std::sort(model.labels.begin(), model.labels.end());
  model.labels.erase(std::unique(model.labels.begin(), model.labels.end()), model.labels.end());
  if (model.labels.size() < 2) throw InputError("nb_fit: need at least two distinct labels");

  const std::size_t k = model.labels.size();
  const std::size_t d = matrix.cols();
  const std::size_t n = matrix.rows();
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::lower_bound(model.labels.begin(), model.labels.end(), labels[i]);
    class_of[i] = static_cast<std::size_t>(it - model.labels.begin());
    ++counts[class_of[i]];
  }

  model.means = Matrix(k, d);
  model.variances = Matrix(k, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) model.means(class_of[i], j) += matrix(i, j);
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < d; ++j) model.means(c, j) /= static_cast<double>(counts[c]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double dev = matrix(i, j) - model.means(class_of[i], j);
      model.variances(class_of[i], j) += dev * dev;
    }
  }

  double max_variance = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    double mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu += matrix(i, j);
    mu /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += (matrix(i, j) - mu) * (matrix(i, j) - mu);
    max_variance = std::max(max_variance, ss / static_cast<double>(n));
  }
  model.var_epsilon = kNbVarSmoothing * std::max(max_variance, kNbVarianceFloor);

  model.priors.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    model.priors[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
    for (std::size_t j = 0; j < d; ++j) {
      model.variances(c, j) = model.variances(c, j) / static_cast<double>(counts[c]) +
                              model.var_epsilon;
    }
  }
  return model;
}

std::vector<double> nb_log_joint(const NbModel& model, std::span<const double> row) {
  if (row.size() != model.feature_count()) {
    throw InputError("nb_predict: row has " + std::to_string(row.size()) +
                     " features, model expects " + std::to_string(model.feature_count()));
  }
  constexpr double kLog2Pi = 1.8378770664093454835606594728112;  // log(2*pi)
  std::vector<double> out(model.labels.size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    double s = std::log(model.priors[c]);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double var = model.variances(c, j);
      const double dev = row[j] - model.means(c, j);
      s -= 0.5 * (kLog2Pi + std::log(var)) + dev * dev / (2.0 * var);
    }
    out[c] = s;
  }
  return out;
}

std::vector<double> nb_posteriors(const NbModel& model, std::span<const double> row) {
  std::vector<double> lj = nb_log_joint(model, row);
  const double top = *std::max_element(lj.begin(), lj.end());
  double z = 0.0;
  for (double& v : lj) z += (v = std::exp(v - top));
  for (double& v : lj) v /= z;
  return lj;
}

std::vector<LabelScore> nb_predict(const NbModel& model, std::span<const double> row) {
  const std::vector<double> lj = nb_log_joint(model, row);
  std::vector<LabelScore> out;
  out.reserve(lj.size());
  for (std::size_t c = 0; c < lj.size(); ++c) out.push_back({model.labels[c], lj[c], 0.0});
  std::stable_sort(out.begin(), out.end(),
                   [](const LabelScore& a, const LabelScore& b) { return a.score > b.score; });
  return out;
}

}  // namespace nagasent
