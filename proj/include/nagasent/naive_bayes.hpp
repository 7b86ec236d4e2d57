#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nagasent/label_score.hpp"
#include "nagasent/matrix.hpp"

namespace nagasent {

/// Gaussian naive Bayes parameters. `means` and `variances` are
/// label_count x feature_count; variances already include `var_epsilon`.
struct NbModel {
  std::vector<std::string> labels;  // sorted
  std::vector<double> priors;
  Matrix means;
  Matrix variances;
  double var_epsilon = 0.0;

  std::size_t feature_count() const noexcept { return means.cols(); }
};

inline constexpr double kNbVarSmoothing = 1e-9;
inline constexpr double kNbVarianceFloor = 1e-12;

/// Priors are label frequencies; variances use divisor n and are smoothed by
/// kNbVarSmoothing * max(largest per-feature variance of the whole matrix,
/// kNbVarianceFloor). Requires at least two distinct labels.
NbModel nb_fit(const Matrix& matrix, std::span<const std::string> labels);

/// Per-label log prior + sum of Gaussian log densities, in `model.labels` order.
std::vector<double> nb_log_joint(const NbModel& model, std::span<const double> row);

/// Normalized posterior probabilities, in `model.labels` order.
std::vector<double> nb_posteriors(const NbModel& model, std::span<const double> row);

/// Labels sorted by descending log joint; ties keep `model.labels` order.
std::vector<LabelScore> nb_predict(const NbModel& model, std::span<const double> row);

}  // namespace nagasent
