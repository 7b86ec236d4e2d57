#include "nagasent/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "nagasent/error.hpp"
#include "rng.hpp"

namespace nagasent {
namespace {

// Out-of-lexicon filler vocabulary; entries that happen to be in the
// supplied lexicon are dropped.
constexpr std::array<const char*, 20> kFillerWords{
    "moy",  "dos",   "baje", "pora",   "yeti",  "laga", "kun",  "etu",    "sob",    "nimite",
    "aru",  "kintu", "bhi",  "hoile",  "kaam",  "manu", "din",  "gaon",   "sorkar", "khobor"};

constexpr const char* kCopula = "ase";

std::vector<std::string> sorted_words(const PolarityLexicon& lex, Polarity p) {
  std::vector<std::string> words;
  for (const auto& [w, cat] : lex.entries()) {
    if (cat == p) words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

const std::string& pick(const std::vector<std::string>& pool, detail::Rng& rng) {
  return pool[detail::uniform_below(rng, pool.size())];
}

enum class Cue { none, pos_emoticon, neg_emoticon, exclamation, olop, question };

Emotion emotion_for(Polarity p, bool pos_emoticon, bool neg_emoticon, bool exclamation,
                    bool olop) {
  switch (p) {
    case Polarity::positive:
      if (pos_emoticon) return Emotion::joy;
      if (exclamation) return Emotion::surprise;
      return Emotion::trust;
    case Polarity::negative:
      if (neg_emoticon) return Emotion::sadness;
      if (exclamation) return Emotion::anger;
      if (olop) return Emotion::disgust;
      return Emotion::fear;
    case Polarity::neutral: break;
  }
  return Emotion::anticipation;
}

}  // namespace

SyntheticCorpus generate_synthetic_corpus(const PolarityLexicon& lexicon, std::size_t n,
                                          std::uint64_t seed, const SyntheticConfig& config) {
  if (n == 0) throw InputError("synthetic corpus size must be positive");
  double mix_total = 0.0;
  for (double w : config.polarity_mix) {
    if (w < 0.0) throw InputError("polarity mix weights must be non-negative");
    mix_total += w;
  }
  if (!(mix_total > 0.0)) throw InputError("polarity mix must have positive total weight");
  if (config.max_dominant == 0) throw InputError("max_dominant must be positive");

  const std::vector<std::string> positive = sorted_words(lexicon, Polarity::positive);
  const std::vector<std::string> negative = sorted_words(lexicon, Polarity::negative);
  std::vector<std::string> neutral = sorted_words(lexicon, Polarity::neutral);
  const bool has_copula = std::erase(neutral, kCopula) > 0;
  std::vector<std::string> fillers;
  for (const char* w : kFillerWords) {
    if (!lexicon.lookup_normalized(w)) fillers.emplace_back(w);
  }
  if (config.polarity_mix[static_cast<int>(Polarity::positive)] > 0.0 && positive.empty()) {
    throw InputError("synthetic corpus needs positive lexicon words");
  }
  if (config.polarity_mix[static_cast<int>(Polarity::negative)] > 0.0 && negative.empty()) {
    throw InputError("synthetic corpus needs negative lexicon words");
  }

  SyntheticCorpus out;
  out.config = config;
  detail::Rng rng(seed);
  std::vector<SentenceRecord> records;
  records.reserve(n);

  for (std::size_t id = 0; id < n; ++id) {
    const double u = detail::uniform01(rng) * mix_total;
    Polarity polarity = Polarity::positive;
    double acc = 0.0;
    for (Polarity p : kAllPolarities) {
      acc += config.polarity_mix[static_cast<int>(p)];
      if (u < acc && config.polarity_mix[static_cast<int>(p)] > 0.0) {
        polarity = p;
        break;
      }
    }

    std::vector<std::string> words;
    if (polarity != Polarity::neutral) {
      const auto& dominant = polarity == Polarity::positive ? positive : negative;
      const auto& opposite = polarity == Polarity::positive ? negative : positive;
      const std::size_t d = 1 + detail::uniform_below(rng, config.max_dominant);
      const std::size_t o = opposite.empty() ? 0 : detail::uniform_below(rng, d);
      for (std::size_t k = 0; k < d; ++k) words.push_back(pick(dominant, rng));
      for (std::size_t k = 0; k < o; ++k) words.push_back(pick(opposite, rng));
    }
    const std::size_t f = detail::uniform_below(rng, config.max_filler + 1);
    for (std::size_t k = 0; k < f; ++k) {
      const bool use_neutral = !neutral.empty() && (fillers.empty() || (rng() & 1));
      if (use_neutral) {
        words.push_back(pick(neutral, rng));
      } else if (!fillers.empty()) {
        words.push_back(pick(fillers, rng));
      }
    }
    if (has_copula) words.emplace_back(kCopula);

    bool olop = false;
    if (polarity != Polarity::neutral && detail::uniform01(rng) < config.intensity_rate) {
      olop = polarity == Polarity::negative;
      words.emplace_back(olop ? "olop" : "bisi");
    }
    if (words.empty()) words.push_back(fillers.empty() ? std::string(kCopula) : pick(fillers, rng));
    detail::shuffle(words, rng);

    Cue cue = Cue::none;
    switch (polarity) {
      case Polarity::positive: {
        constexpr std::array<Cue, 3> cues{Cue::pos_emoticon, Cue::exclamation, Cue::none};
        cue = cues[detail::uniform_below(rng, cues.size())];
        break;
      }
      case Polarity::negative: {
        constexpr std::array<Cue, 4> cues{Cue::neg_emoticon, Cue::exclamation, Cue::olop,
                                          Cue::none};
        cue = cues[detail::uniform_below(rng, cues.size())];
        break;
      }
      case Polarity::neutral:
        if (detail::uniform01(rng) < config.question_rate) cue = Cue::question;
        break;
    }
    if (cue == Cue::olop) {
      words.insert(words.begin() + static_cast<std::ptrdiff_t>(
                                       detail::uniform_below(rng, words.size() + 1)),
                   "olop");
      olop = true;
    }

    for (const auto& w : words) ++out.word_frequency[w];

    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    switch (cue) {
      case Cue::exclamation: text += "!"; break;
      case Cue::question: text += "?"; break;
      case Cue::pos_emoticon: text += ". ☺"; break;
      case Cue::neg_emoticon: text += ". ☹"; break;
      default: text += "."; break;
    }

    SentenceRecord rec;
    rec.id = id + 1;
    rec.text = std::move(text);
    rec.polarity = polarity;
    rec.emotion = emotion_for(polarity, cue == Cue::pos_emoticon, cue == Cue::neg_emoticon,
                              cue == Cue::exclamation, olop);
    records.push_back(std::move(rec));
  }
  out.corpus = Corpus(std::move(records));
  return out;
}

}  // namespace nagasent
