#include "nagasent/features.hpp"

#include <cmath>
#include <string>

#include "nagasent/error.hpp"

namespace nagasent {

std::array<int, 12> FeatureVector::values() const noexcept {
  return {sentence_length,     pos_word_count,      neg_word_count, neu_word_count,
          pos_intensity_count, neg_intensity_count, has_bisi,       has_olop,
          has_pos_emoticon,    has_neg_emoticon,    has_exclamation, has_question};
}

std::string_view to_string(FeatureSetChoice choice) noexcept {
  return choice == FeatureSetChoice::full_12 ? "full_12" : "best_9";
}

std::optional<FeatureSetChoice> parse_feature_set(std::string_view s) {
  if (s == "full_12" || s == "full") return FeatureSetChoice::full_12;
  if (s == "best_9" || s == "best") return FeatureSetChoice::best_9;
  return std::nullopt;
}

std::size_t feature_count(FeatureSetChoice choice) noexcept {
  return choice == FeatureSetChoice::full_12 ? kFeatureNames.size() : kBestFeatureIndices.size();
}

std::vector<std::string_view> feature_names(FeatureSetChoice choice) {
  if (choice == FeatureSetChoice::full_12) return {kFeatureNames.begin(), kFeatureNames.end()};
  std::vector<std::string_view> names;
  for (std::size_t i : kBestFeatureIndices) names.push_back(kFeatureNames[i]);
  return names;
}

FeatureVector extract(std::span<const Token> tokens, const PolarityLexicon& plex,
                      const IntensityLexicon& ilex) {
  FeatureVector v;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case TokenKind::word: {
        ++v.sentence_length;
        if (const auto p = plex.lookup_normalized(t.surface)) {
          switch (*p) {
            case Polarity::positive: ++v.pos_word_count; break;
            case Polarity::negative: ++v.neg_word_count; break;
            case Polarity::neutral: ++v.neu_word_count; break;
          }
        }
        if (ilex.is_positive(t.surface)) ++v.pos_intensity_count;
        if (ilex.is_negative(t.surface)) ++v.neg_intensity_count;
        if (t.surface == "bisi") v.has_bisi = 1;
        if (t.surface == "olop") v.has_olop = 1;
        break;
      }
      case TokenKind::emoticon_positive: v.has_pos_emoticon = 1; break;
      case TokenKind::emoticon_negative: v.has_neg_emoticon = 1; break;
      case TokenKind::exclamation: v.has_exclamation = 1; break;
      case TokenKind::question: v.has_question = 1; break;
      case TokenKind::other_punct: break;
    }
  }
  return v;
}

std::vector<double> project(const FeatureVector& v, FeatureSetChoice choice) {
  const auto all = v.values();
  std::vector<double> out;
  if (choice == FeatureSetChoice::full_12) {
    out.assign(all.begin(), all.end());
  } else {
    out.reserve(kBestFeatureIndices.size());
    for (std::size_t i : kBestFeatureIndices) out.push_back(all[i]);
  }
  return out;
}

FeaturizedCorpus featurize_corpus(const Corpus& corpus, const PolarityLexicon& plex,
                                  const IntensityLexicon& ilex, FeatureSetChoice choice,
                                  bool require_labels) {
  FeaturizedCorpus out;
  out.matrix = Matrix(0, feature_count(choice));
  for (const auto& r : corpus.records()) {
    if (require_labels) {
      if (!r.has_labels()) {
        throw InputError("record " + std::to_string(r.id) + " has no labels");
      }
      out.polarity_labels.push_back(*r.polarity);
      out.emotion_labels.push_back(*r.emotion);
    }
    out.matrix.append_row(project(extract(tokenize(r.text), plex, ilex), choice));
  }
  return out;
}

Standardizer Standardizer::fit(const Matrix& m) {
  if (m.empty()) throw InputError("cannot standardize an empty matrix");
  Standardizer s;
  s.mean.assign(m.cols(), 0.0);
  s.scale.assign(m.cols(), 1.0);
  const auto n = static_cast<double>(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, j);
    const double mu = sum / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) ss += (m(i, j) - mu) * (m(i, j) - mu);
    const double sd = std::sqrt(ss / n);
    s.mean[j] = mu;
    s.scale[j] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

std::vector<double> Standardizer::transform(std::span<const double> row) const {
  if (row.size() != mean.size()) throw InputError("standardizer dimension mismatch");
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - mean[j]) / scale[j];
  return out;
}

Matrix Standardizer::transform(const Matrix& m) const {
  Matrix out(0, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) out.append_row(transform(m.row(i)));
  return out;
}

}  // namespace nagasent
