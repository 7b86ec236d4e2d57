#include "nagasent/lexicon.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "nagasent/error.hpp"
#include "nagasent/tokenizer.hpp"

namespace nagasent {
namespace {

struct TsvEntry {
  std::string word;
  std::string category;
  std::size_t line;
};

std::string trimmed(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<TsvEntry> read_tsv(std::istream& in) {
  std::vector<TsvEntry> entries;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const std::string t = trimmed(line);
    if (t.empty() || t.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw InputError("expected word<TAB>category at line " + std::to_string(number));
    }
    entries.push_back(
        {trimmed(std::string_view(line).substr(0, tab)),
         trimmed(std::string_view(line).substr(tab + 1)), number});
  }
  return entries;
}

std::ifstream open(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string("cannot open ") + what + " " + path.string());
  return in;
}

std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

}  // namespace

void PolarityLexicon::insert(std::string_view word, Polarity category) {
  std::string key = normalize(word);
  if (key.empty()) throw InputError("empty lexicon word");
  if (key.find(' ') != std::string::npos) {
    throw InputError("multi-word lexicon entry '" + key + "'");
  }
  auto [it, inserted] = entries_.emplace(std::move(key), category);
  if (!inserted) throw InputError("duplicate lexicon word '" + it->first + "'");
  ++counts_[static_cast<int>(category)];
}

std::optional<Polarity> PolarityLexicon::lookup(std::string_view word) const {
  return lookup_normalized(normalize(word));
}

std::optional<Polarity> PolarityLexicon::lookup_normalized(const std::string& word) const {
  const auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t PolarityLexicon::count(Polarity category) const noexcept {
  return counts_[static_cast<int>(category)];
}

PolarityLexicon parse_polarity_lexicon(std::istream& in) {
  PolarityLexicon lex;
  for (const auto& e : read_tsv(in)) {
    const auto category = parse_polarity(e.category);
    if (!category) {
      throw InputError("unknown lexicon category '" + e.category + "'" + at_line(e.line));
    }
    try {
      lex.insert(e.word, *category);
    } catch (const InputError& err) {
      throw InputError(err.what() + at_line(e.line));
    }
  }
  if (lex.size() == 0) throw InputError("polarity lexicon is empty");
  return lex;
}

PolarityLexicon load_polarity_lexicon(const std::filesystem::path& path) {
  auto in = open(path, "polarity lexicon");
  try {
    return parse_polarity_lexicon(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::map<Polarity, std::size_t> lexicon_stats(const PolarityLexicon& lexicon) {
  std::map<Polarity, std::size_t> stats;
  for (Polarity p : kAllPolarities) stats[p] = lexicon.count(p);
  return stats;
}

std::string IntensityLexicon::checked(std::string_view word) const {
  std::string key = normalize(word);
  if (key.empty()) throw InputError("empty intensity word");
  if (positive_.contains(key) || negative_.contains(key)) {
    throw InputError("intensity word '" + key + "' listed more than once");
  }
  return key;
}

void IntensityLexicon::add_positive(std::string_view word) { positive_.insert(checked(word)); }

void IntensityLexicon::add_negative(std::string_view word) { negative_.insert(checked(word)); }

IntensityLexicon parse_intensity_lexicon(std::istream& in) {
  IntensityLexicon lex;
  for (const auto& e : read_tsv(in)) {
    try {
      if (e.category == "positive_intensity") {
        lex.add_positive(e.word);
      } else if (e.category == "negative_intensity") {
        lex.add_negative(e.word);
      } else {
        throw InputError("unknown intensity category '" + e.category + "'");
      }
    } catch (const InputError& err) {
      throw InputError(err.what() + at_line(e.line));
    }
  }
  return lex;
}

IntensityLexicon load_intensity_lexicon(const std::filesystem::path& path) {
  auto in = open(path, "intensity lexicon");
  try {
    return parse_intensity_lexicon(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace nagasent
