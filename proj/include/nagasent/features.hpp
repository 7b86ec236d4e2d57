#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nagasent/corpus.hpp"
#include "nagasent/labels.hpp"
#include "nagasent/lexicon.hpp"
#include "nagasent/matrix.hpp"
#include "nagasent/tokenizer.hpp"

namespace nagasent {

/// The twelve sentence features. Counts are token occurrences (duplicates
/// included); the `has_*` members are 0/1 occurrence flags.
struct FeatureVector {
  int sentence_length = 0;  // word tokens
  int pos_word_count = 0;
  int neg_word_count = 0;
  int neu_word_count = 0;
  int pos_intensity_count = 0;
  int neg_intensity_count = 0;
  int has_bisi = 0;
  int has_olop = 0;
  int has_pos_emoticon = 0;
  int has_neg_emoticon = 0;
  int has_exclamation = 0;
  int has_question = 0;

  std::array<int, 12> values() const noexcept;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

inline constexpr std::array<std::string_view, 12> kFeatureNames{
    "sentence_length",     "pos_word_count",      "neg_word_count",   "neu_word_count",
    "pos_intensity_count", "neg_intensity_count", "has_bisi",         "has_olop",
    "has_pos_emoticon",    "has_neg_emoticon",    "has_exclamation",  "has_question"};

enum class FeatureSetChoice { full_12, best_9 };

// Zero-based indices into FeatureVector::values() kept by best_9. Drops
// sentence_length, neu_word_count and has_question.
inline constexpr std::array<std::size_t, 9> kBestFeatureIndices{1, 2, 4, 5, 6, 7, 8, 9, 10};

std::string_view to_string(FeatureSetChoice choice) noexcept;
std::optional<FeatureSetChoice> parse_feature_set(std::string_view s);

std::size_t feature_count(FeatureSetChoice choice) noexcept;

/// Names of the selected features, in projection order.
std::vector<std::string_view> feature_names(FeatureSetChoice choice);

FeatureVector extract(std::span<const Token> tokens, const PolarityLexicon& plex,
                      const IntensityLexicon& ilex);

std::vector<double> project(const FeatureVector& v, FeatureSetChoice choice);

struct FeaturizedCorpus {
  Matrix matrix;
  std::vector<Polarity> polarity_labels;  // empty unless labels were requested
  std::vector<Emotion> emotion_labels;
};

/// Row i is record i. Throws InputError when `require_labels` is set and a
/// record is missing a label.
FeaturizedCorpus featurize_corpus(const Corpus& corpus, const PolarityLexicon& plex,
                                  const IntensityLexicon& ilex, FeatureSetChoice choice,
                                  bool require_labels);

/// Per-column standardization (x - mean) / stddev. Columns with zero spread
/// keep a scale of 1. Off by default in the training pipeline.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  static Standardizer fit(const Matrix& m);
  Matrix transform(const Matrix& m) const;
  std::vector<double> transform(std::span<const double> row) const;
};

}  // namespace nagasent
