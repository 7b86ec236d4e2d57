#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "nagasent/corpus.hpp"
#include "nagasent/lexicon.hpp"

namespace nagasent {

/// Knobs of the planted-signal generator.
///
/// Each sentence first draws its polarity from `polarity_mix` (indexed by
/// Polarity). It then receives:
///   - 1..max_dominant words of its own lexicon category (positive and
///     negative sentences); strictly fewer words of the opposite category,
///     so the label always matches the dominant category;
///   - neutral sentences get no positive or negative words at all;
///   - 0..max_filler neutral-lexicon words and out-of-lexicon filler words;
///   - the copula "ase" exactly once when it is in the lexicon, which makes
///     it the most frequent word;
///   - a cue drawn per polarity (see `emotion_for`) and, with probability
///     `intensity_rate`, "bisi" (positive sentences) or "olop" (negative).
///
/// Emotion rule (a pure function of polarity and cue):
///   positive + "☺" -> joy, positive + "!" -> surprise, positive -> trust;
///   negative + "☹" -> sadness, negative + "!" -> anger,
///   negative + "olop" -> disgust, negative -> fear;
///   neutral -> anticipation (a "?" is appended with probability
///   `question_rate`).
struct SyntheticConfig {
  std::array<double, 3> polarity_mix{0.20, 0.38, 0.42};  // negative, neutral, positive
  std::size_t max_dominant = 3;
  std::size_t max_filler = 5;
  double intensity_rate = 0.3;
  double question_rate = 0.4;
};

struct SyntheticCorpus {
  Corpus corpus;
  std::map<std::string, std::size_t> word_frequency;  // words as emitted
  SyntheticConfig config;
};

/// Pure function of (lexicon, n, seed, config). Throws InputError for n == 0
/// or when a category drawn with non-zero probability has no words.
SyntheticCorpus generate_synthetic_corpus(const PolarityLexicon& lexicon, std::size_t n,
                                          std::uint64_t seed, const SyntheticConfig& config = {});

}  // namespace nagasent
