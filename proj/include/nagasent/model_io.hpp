#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nagasent/features.hpp"
#include "nagasent/label_score.hpp"
#include "nagasent/naive_bayes.hpp"
#include "nagasent/svm.hpp"

namespace nagasent {

inline constexpr int kModelFormatVersion = 1;

/// A trained classifier plus what is needed to featurize its inputs.
struct ModelBundle {
  std::variant<NbModel, SvmModel> model;
  FeatureSetChoice feature_set = FeatureSetChoice::best_9;
  std::string task;  // "polarity" or "emotion"; empty when unknown
  std::optional<Standardizer> scaler;

  std::size_t feature_count() const;
  const std::vector<std::string>& labels() const;
  std::string_view kind() const;  // "nb" or "svm"
};

/// Throws InputError on dimension mismatch. Applies the scaler if present.
std::vector<LabelScore> predict(const ModelBundle& bundle, std::span<const double> row);

std::string model_to_json(const ModelBundle& bundle);
/// Throws InputError for corrupt documents or an unsupported format_version.
ModelBundle model_from_json(const std::string& text);

void save_model(const ModelBundle& bundle, const std::filesystem::path& path);
ModelBundle load_model(const std::filesystem::path& path);

}  // namespace nagasent
