#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "nagasent/labels.hpp"

namespace nagasent {

/// Word to polarity category map. Keys are stored normalized; a word belongs
/// to at most one category.
class PolarityLexicon {
 public:
  /// Normalizes `word` and inserts it. Throws InputError if the normalized
  /// word is empty or already present (in any category).
  void insert(std::string_view word, Polarity category);

  /// Absent words yield nullopt; absence does not mean neutral.
  std::optional<Polarity> lookup(std::string_view word) const;

  /// Lookup of an already-normalized word, skipping normalization.
  std::optional<Polarity> lookup_normalized(const std::string& word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t count(Polarity category) const noexcept;

  const std::unordered_map<std::string, Polarity>& entries() const noexcept { return entries_; }

 private:
  std::unordered_map<std::string, Polarity> entries_;
  std::size_t counts_[3] = {0, 0, 0};
};

/// Reads `word<TAB>category` rows; `#` lines and blank lines are skipped.
PolarityLexicon load_polarity_lexicon(const std::filesystem::path& path);
PolarityLexicon parse_polarity_lexicon(std::istream& in);

/// Category counts, one entry per polarity (zeros included).
std::map<Polarity, std::size_t> lexicon_stats(const PolarityLexicon& lexicon);

class IntensityLexicon {
 public:
  /// Throws InputError if the normalized word is already in either set.
  void add_positive(std::string_view word);
  void add_negative(std::string_view word);

  bool is_positive(const std::string& normalized_word) const {
    return positive_.contains(normalized_word);
  }
  bool is_negative(const std::string& normalized_word) const {
    return negative_.contains(normalized_word);
  }

  const std::set<std::string>& positive() const noexcept { return positive_; }
  const std::set<std::string>& negative() const noexcept { return negative_; }

 private:
  std::string checked(std::string_view word) const;

  std::set<std::string> positive_;
  std::set<std::string> negative_;
};

/// Reads `word<TAB>{positive_intensity|negative_intensity}` rows. Empty
/// lists are valid.
IntensityLexicon load_intensity_lexicon(const std::filesystem::path& path);
IntensityLexicon parse_intensity_lexicon(std::istream& in);

}  // namespace nagasent
