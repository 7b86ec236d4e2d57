#include "nagasent/svm.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <string>

#include "nagasent/error.hpp"
#include "rng.hpp"

namespace nagasent {
namespace {

constexpr double kTau = 1e-12;          // curvature floor for non-positive eta

// Working state of one binary SMO solve. Objective is the standard dual
// max W(a) = sum a - 1/2 a'Qa, Q_ij = y_i y_j K_ij, tracked through the
// gradient G = Qa - 1 of the equivalent minimization.
class SmoSolver {
 public:
  SmoSolver(const Matrix& x, std::span<const int> y, const SvmConfig& config)
      : y_(y), c_(config.c_penalty), tol_(config.tol), n_(x.rows()), kernel_(n_ * n_),
        alpha_(n_, 0.0), grad_(n_, -1.0), rng_(config.seed) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        kernel_[i * n_ + j] = kernel_[j * n_ + i] = kernel_eval(config, x.row(i), x.row(j));
      }
    }
  }

  std::size_t solve(std::int64_t max_iterations, SmoTrace* trace) {
    std::size_t iterations = 0;
    std::size_t cursor = 0;
    for (;;) {
      const Extremes ex = extremes();
      if (ex.up_value - ex.low_value <= tol_) break;
      if (max_iterations >= 0 && iterations >= static_cast<std::size_t>(max_iterations)) {
        throw ConvergenceError("SMO did not converge within " + std::to_string(iterations) +
                                   " iterations (KKT gap " +
                                   std::to_string(ex.up_value - ex.low_value) + ")",
                               iterations);
      }

      // First violator in scan order, paired with the extreme of the opposite
      // index set (the partner maximizing |E1 - E2|).
      bool stepped = false;
      for (std::size_t s = 0; s < n_ && !stepped; ++s) {
        const std::size_t t = (cursor + s) % n_;
        const double v = -y_[t] * grad_[t];
        if (in_up(t) && v > ex.low_value + tol_) {
          stepped = take_step(t, ex.low_index) || fallback(t, /*t_is_up=*/true, v);
        } else if (in_low(t) && v < ex.up_value - tol_) {
          stepped = take_step(ex.up_index, t) || fallback(t, /*t_is_up=*/false, v);
        }
        if (stepped) cursor = t + 1;
      }
      if (!stepped) {
        throw ConvergenceError("SMO stalled: no working pair makes progress", iterations);
      }
      ++iterations;
      if (trace != nullptr) trace->objective.push_back(dual_objective());
    }
    return iterations;
  }

  double intercept() const {
    double sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t t = 0; t < n_; ++t) {
      if (alpha_[t] > 0.0 && alpha_[t] < c_) {
        sum += -y_[t] * grad_[t];
        ++free_count;
      }
    }
    if (free_count > 0) return sum / static_cast<double>(free_count);
    const Extremes ex = extremes();
    return 0.5 * (ex.up_value + ex.low_value);
  }

  const std::vector<double>& alpha() const noexcept { return alpha_; }

 private:
  struct Extremes {
    double up_value;  // max over I_up of -y G
    std::size_t up_index;
    double low_value;  // min over I_low of -y G
    std::size_t low_index;
  };

  bool in_up(std::size_t t) const {
    return (y_[t] > 0 && alpha_[t] < c_) || (y_[t] < 0 && alpha_[t] > 0.0);
  }
  bool in_low(std::size_t t) const {
    return (y_[t] < 0 && alpha_[t] < c_) || (y_[t] > 0 && alpha_[t] > 0.0);
  }

  double k(std::size_t i, std::size_t j) const { return kernel_[i * n_ + j]; }
  double q(std::size_t i, std::size_t j) const { return y_[i] * y_[j] * k(i, j); }

  Extremes extremes() const {
    Extremes ex{-HUGE_VAL, 0, HUGE_VAL, 0};
    for (std::size_t t = 0; t < n_; ++t) {
      const double v = -y_[t] * grad_[t];
      if (in_up(t) && v > ex.up_value) ex.up_value = v, ex.up_index = t;
      if (in_low(t) && v < ex.low_value) ex.low_value = v, ex.low_index = t;
    }
    return ex;
  }

  // Random partners from the opposite set that still violate together with t.
  bool fallback(std::size_t t, bool t_is_up, double v) {
    std::vector<std::size_t> candidates;
    for (std::size_t u = 0; u < n_; ++u) {
      if (u == t) continue;
      const double w = -y_[u] * grad_[u];
      if (t_is_up ? (in_low(u) && w < v - tol_) : (in_up(u) && w > v + tol_)) {
        candidates.push_back(u);
      }
    }
    detail::shuffle(candidates, rng_);
    for (std::size_t u : candidates) {
      if (t_is_up ? take_step(t, u) : take_step(u, t)) return true;
    }
    return false;
  }

  // Analytic two-variable update with box clipping; i in I_up, j in I_low.
  bool take_step(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const double old_i = alpha_[i];
    const double old_j = alpha_[j];
    double& ai = alpha_[i];
    double& aj = alpha_[j];
    double eta = k(i, i) + k(j, j) - 2.0 * k(i, j);
    if (eta <= 0.0) eta = kTau;

    if (y_[i] != y_[j]) {
      const double delta = (-grad_[i] - grad_[j]) / eta;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) aj = 0.0, ai = diff;
      } else {
        if (ai < 0.0) ai = 0.0, aj = -diff;
      }
      if (diff > 0.0) {
        if (ai > c_) ai = c_, aj = c_ - diff;
      } else {
        if (aj > c_) aj = c_, ai = c_ + diff;
      }
    } else {
      const double delta = (grad_[i] - grad_[j]) / eta;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > c_) {
        if (ai > c_) ai = c_, aj = sum - c_;
      } else {
        if (aj < 0.0) aj = 0.0, ai = sum;
      }
      if (sum > c_) {
        if (aj > c_) aj = c_, ai = sum - c_;
      } else {
        if (ai < 0.0) ai = 0.0, aj = sum;
      }
    }

    const double di = ai - old_i;
    const double dj = aj - old_j;
    if (di == 0.0 && dj == 0.0) return false;
    for (std::size_t t = 0; t < n_; ++t) grad_[t] += q(i, t) * di + q(j, t) * dj;
    return true;
  }

  double dual_objective() const {
    double w = 0.0;
    for (std::size_t t = 0; t < n_; ++t) w += alpha_[t] * (1.0 - grad_[t]);
    return 0.5 * w;
  }

  std::span<const int> y_;
  double c_;
  double tol_;
  std::size_t n_;
  std::vector<double> kernel_;
  std::vector<double> alpha_;
  std::vector<double> grad_;
  detail::Rng rng_;
};

}  // namespace

std::string_view to_string(KernelType k) noexcept {
  switch (k) {
    case KernelType::linear: return "linear";
    case KernelType::poly: return "poly";
    case KernelType::rbf: return "rbf";
  }
  return "?";
}

std::optional<KernelType> parse_kernel(std::string_view s) {
  if (s == "linear") return KernelType::linear;
  if (s == "poly") return KernelType::poly;
  if (s == "rbf") return KernelType::rbf;
  return std::nullopt;
}

double SvmConfig::resolved_gamma(std::size_t feature_count) const {
  if (gamma) return *gamma;
  return feature_count == 0 ? 1.0 : 1.0 / static_cast<double>(feature_count);
}

void SvmConfig::validate() const {
  if (!(c_penalty > 0.0)) throw InputError("SVM C must be positive");
  if (!(tol > 0.0)) throw InputError("SVM tol must be positive");
  if (degree < 0) throw InputError("SVM degree must be non-negative");
  if (gamma && !(*gamma > 0.0)) throw InputError("SVM gamma must be positive");
}

double kernel_eval(const SvmConfig& config, std::span<const double> x,
                   std::span<const double> z) {
  if (x.size() != z.size()) {
    throw InputError("kernel_eval: length mismatch (" + std::to_string(x.size()) + " vs " +
                     std::to_string(z.size()) + ")");
  }
  switch (config.kernel) {
    case KernelType::linear:
      return std::inner_product(x.begin(), x.end(), z.begin(), 0.0);
    case KernelType::poly: {
      const double base =
          config.resolved_gamma(x.size()) * std::inner_product(x.begin(), x.end(), z.begin(), 0.0) +
          config.coef0;
      return std::pow(base, config.degree);
    }
    case KernelType::rbf: {
      double d2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - z[i]) * (x[i] - z[i]);
      return std::exp(-config.resolved_gamma(x.size()) * d2);
    }
  }
  return 0.0;
}

double decision_value(const BinarySvm& machine, const SvmConfig& config,
                      std::span<const double> row) {
  double f = machine.intercept;
  for (std::size_t k = 0; k < machine.dual_coef.size(); ++k) {
    f += machine.dual_coef[k] * kernel_eval(config, machine.support_vectors.row(k), row);
  }
  return f;
}

PairFit svm_fit_pair(const Matrix& matrix, std::span<const int> targets, const SvmConfig& config,
                     SmoTrace* trace) {
  config.validate();
  if (matrix.rows() != targets.size()) throw InputError("svm_fit_pair: rows/targets mismatch");
  bool has_pos = false, has_neg = false;
  for (int t : targets) {
    if (t == 1) has_pos = true;
    else if (t == -1) has_neg = true;
    else throw InputError("svm_fit_pair: targets must be +1 or -1");
  }
  if (!has_pos || !has_neg) throw InputError("svm_fit_pair: both classes must be present");

  SmoSolver solver(matrix, targets, config);
  PairFit fit;
  fit.iterations = solver.solve(config.max_iterations, trace);
  fit.alpha = solver.alpha();
  fit.machine.intercept = solver.intercept();
  fit.machine.support_vectors = Matrix(0, matrix.cols());
  for (std::size_t i = 0; i < fit.alpha.size(); ++i) {
    if (fit.alpha[i] > kSupportVectorThreshold) {
      fit.support_indices.push_back(i);
      fit.machine.support_vectors.append_row(matrix.row(i));
      fit.machine.dual_coef.push_back(fit.alpha[i] * targets[i]);
    }
  }
  return fit;
}

SvmModel svm_fit(const Matrix& matrix, std::span<const std::string> labels,
                 const SvmConfig& config, std::span<const std::string> label_set) {
  config.validate();
  if (matrix.rows() != labels.size()) {
    throw InputError("svm_fit: " + std::to_string(matrix.rows()) + " rows but " +
                     std::to_string(labels.size()) + " labels");
  }
  SvmModel model;
  model.config = config;
  model.feature_count = matrix.cols();
  if (label_set.empty()) {
    model.labels.assign(labels.begin(), labels.end());
    std::sort(model.labels.begin(), model.labels.end());
    model.labels.erase(std::unique(model.labels.begin(), model.labels.end()),
                       model.labels.end());
  } else {
    model.labels.assign(label_set.begin(), label_set.end());
  }

  std::vector<std::vector<std::size_t>> members(model.labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = std::find(model.labels.begin(), model.labels.end(), labels[i]);
    if (it == model.labels.end()) throw InputError("svm_fit: label '" + labels[i] + "' not in label set");
    members[static_cast<std::size_t>(it - model.labels.begin())].push_back(i);
  }
  const auto present =
      std::count_if(members.begin(), members.end(), [](const auto& m) { return !m.empty(); });
  if (present < 2) throw InputError("svm_fit: need at least two distinct labels");

  struct Job {
    std::size_t a, b;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < model.labels.size(); ++a) {
    for (std::size_t b = a + 1; b < model.labels.size(); ++b) {
      if (!members[a].empty() && !members[b].empty()) jobs.push_back({a, b});
    }
  }

  // Pairwise problems share only read-only inputs.
  std::vector<std::future<BinarySvm>> results;
  results.reserve(jobs.size());
  for (std::size_t p = 0; p < jobs.size(); ++p) {
    results.push_back(std::async(std::launch::async, [&, p] {
      const Job job = jobs[p];
      Matrix sub(0, matrix.cols());
      std::vector<int> y;
      // Rows keep their original order within the pair.
      std::vector<std::size_t> rows(members[job.a]);
      rows.insert(rows.end(), members[job.b].begin(), members[job.b].end());
      std::sort(rows.begin(), rows.end());
      for (std::size_t r : rows) {
        sub.append_row(matrix.row(r));
        y.push_back(labels[r] == model.labels[job.a] ? 1 : -1);
      }
      SvmConfig pair_config = config;
      pair_config.seed = config.seed + p;
      return svm_fit_pair(sub, y, pair_config).machine;
    }));
  }
  for (std::size_t p = 0; p < jobs.size(); ++p) {
    model.pairs.push_back({jobs[p].a, jobs[p].b, results[p].get()});
  }
  return model;
}

std::vector<LabelScore> svm_predict(const SvmModel& model, std::span<const double> row) {
  if (row.size() != model.feature_count) {
    throw InputError("svm_predict: row has " + std::to_string(row.size()) +
                     " features, model expects " + std::to_string(model.feature_count));
  }
  const std::size_t k = model.labels.size();
  std::vector<double> votes(k, 0.0), margin(k, 0.0);
  for (const auto& pair : model.pairs) {
    const double d = decision_value(pair.machine, model.config, row);
    const std::size_t winner = d > 0.0 ? pair.positive : pair.negative;
    votes[winner] += 1.0;
    margin[winner] += std::abs(d);
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (votes[a] != votes[b]) return votes[a] > votes[b];
    return margin[a] > margin[b];
  });
  std::vector<LabelScore> out;
  out.reserve(k);
  for (std::size_t c : order) out.push_back({model.labels[c], votes[c], margin[c]});
  return out;
}

}  // namespace nagasent
