#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nagasent/label_score.hpp"
#include "nagasent/matrix.hpp"

namespace nagasent {

enum class KernelType { linear, poly, rbf };

std::string_view to_string(KernelType k) noexcept;
std::optional<KernelType> parse_kernel(std::string_view s);

struct SvmConfig {
  double c_penalty = 1.0;
  KernelType kernel = KernelType::rbf;
  int degree = 3;
  std::optional<double> gamma;  // nullopt: 1 / feature_count
  double coef0 = 0.0;
  double tol = 1e-3;
  std::int64_t max_iterations = -1;  // -1: unbounded
  std::uint64_t seed = 0;            // fallback partner selection only

  double resolved_gamma(std::size_t feature_count) const;

  /// Throws InputError on non-positive C/tol/gamma or negative degree.
  void validate() const;
};

/// linear: <x,z>; poly: (gamma <x,z> + coef0)^degree; rbf: exp(-gamma |x-z|^2).
double kernel_eval(const SvmConfig& config, std::span<const double> x, std::span<const double> z);

/// One binary machine: f(x) = sum_k coef_k K(sv_k, x) + intercept, where
/// coef_k = alpha_k * y_k.
struct BinarySvm {
  Matrix support_vectors;
  std::vector<double> dual_coef;
  double intercept = 0.0;
};

double decision_value(const BinarySvm& machine, const SvmConfig& config,
                      std::span<const double> row);

struct PairFit {
  BinarySvm machine;
  std::vector<double> alpha;  // one per training sample
  std::vector<std::size_t> support_indices;
  std::size_t iterations = 0;
};

/// Dual objective after every accepted pair update.
struct SmoTrace {
  std::vector<double> objective;
};

inline constexpr double kSupportVectorThreshold = 1e-8;

/// Soft-margin kernel SVM dual solved by SMO. `targets` are +1/-1. On return
/// the maximal KKT violation is below `config.tol`.
PairFit svm_fit_pair(const Matrix& matrix, std::span<const int> targets, const SvmConfig& config,
                     SmoTrace* trace = nullptr);

struct SvmPairModel {
  std::size_t positive = 0;  // index into labels; wins when f(x) > 0
  std::size_t negative = 0;
  BinarySvm machine;
};

struct SvmModel {
  std::vector<std::string> labels;
  SvmConfig config;
  std::size_t feature_count = 0;
  std::vector<SvmPairModel> pairs;
};

/// One-vs-one training over `label_set` (sorted unique labels of the data
/// when empty). Pairs with a label absent from the data are skipped.
SvmModel svm_fit(const Matrix& matrix, std::span<const std::string> labels, const SvmConfig& config,
                 std::span<const std::string> label_set = {});

/// Pairwise voting; ties go to the larger summed |decision value|, then to
/// the earlier label.
std::vector<LabelScore> svm_predict(const SvmModel& model, std::span<const double> row);

}  // namespace nagasent
