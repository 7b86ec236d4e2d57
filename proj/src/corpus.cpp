#include "nagasent/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nagasent/csv.hpp"
#include "nagasent/error.hpp"
#include "nagasent/tokenizer.hpp"
#include "rng.hpp"

namespace nagasent {
namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

}  // namespace

Corpus::Corpus(std::vector<SentenceRecord> records) : records_(std::move(records)) {
  labeled_ = !records_.empty();
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (is_blank(r.text)) throw InputError("record " + std::to_string(r.id) + " has empty text");
    if (i > 0 && records_[i - 1].id >= r.id) {
      throw InputError("record ids must be strictly increasing (id " + std::to_string(r.id) +
                       " follows " + std::to_string(records_[i - 1].id) + ")");
    }
    labeled_ = labeled_ && r.has_labels();
  }
}

Corpus parse_corpus(std::istream& in, bool expect_labels) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw InputError("empty corpus file");
  if (!header->fields.empty() && header->fields[0].starts_with("\xEF\xBB\xBF")) {
    header->fields[0].erase(0, 3);
  }
  std::string joined;
  for (std::size_t i = 0; i < header->fields.size(); ++i) {
    joined += (i ? "," : "") + header->fields[i];
  }
  while (!joined.empty() && joined.back() == '\r') joined.pop_back();
  if (joined != kCorpusHeader) {
    throw InputError("bad corpus header '" + joined + "' at line 1, expected '" + kCorpusHeader +
                     "'");
  }

  std::vector<SentenceRecord> records;
  while (auto row = reader.next()) {
    const std::size_t line = row->line;
    if (row->fields.size() == 1 && is_blank(row->fields[0])) continue;
    if (row->fields.size() != 4) {
      throw InputError("malformed row" + at_line(line) + ": expected 4 columns, got " +
                       std::to_string(row->fields.size()));
    }
    SentenceRecord rec;
    const std::string& id = row->fields[0];
    const auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), rec.id);
    if (ec != std::errc() || ptr != id.data() + id.size() || id.empty()) {
      throw InputError("invalid id '" + id + "'" + at_line(line));
    }
    rec.text = row->fields[1];
    if (is_blank(rec.text)) throw InputError("empty text" + at_line(line));
    if (!records.empty() && records.back().id >= rec.id) {
      throw InputError("id " + id + " is not greater than the previous id" + at_line(line));
    }

    const std::string& pol = row->fields[2];
    if (!is_blank(pol)) {
      rec.polarity = parse_polarity(pol);
      if (!rec.polarity) throw InputError("unknown polarity '" + pol + "'" + at_line(line));
    }
    const std::string& emo = row->fields[3];
    if (!is_blank(emo)) {
      rec.emotion = parse_emotion(emo);
      if (!rec.emotion) throw InputError("unknown emotion '" + emo + "'" + at_line(line));
    }
    if (expect_labels && !rec.polarity) throw InputError("missing polarity" + at_line(line));
    if (expect_labels && !rec.emotion) throw InputError("missing emotion" + at_line(line));
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw InputError("corpus file has no records");
  return Corpus(std::move(records));
}

Corpus load_corpus(const std::filesystem::path& path, bool expect_labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open corpus file " + path.string());
  try {
    return parse_corpus(in, expect_labels);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  out << kCorpusHeader << '\n';
  for (const auto& r : corpus.records()) {
    csv::write_row(out, {std::to_string(r.id), r.text,
                         r.polarity ? std::string(to_string(*r.polarity)) : std::string(),
                         r.emotion ? std::string(to_string(*r.emotion)) : std::string()});
  }
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write corpus file " + path.string());
  write_corpus(corpus, out);
  if (!out) throw InputError("write failed for " + path.string());
}

CorpusSplit split_corpus(const Corpus& corpus, const SplitPlan& plan) {
  if (plan.train_count == 0 || plan.test_count == 0) {
    throw InputError("split counts must both be positive");
  }
  if (plan.train_count + plan.test_count != corpus.size()) {
    throw InputError("split " + std::to_string(plan.train_count) + "+" +
                     std::to_string(plan.test_count) + " does not match corpus size " +
                     std::to_string(corpus.size()));
  }
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (plan.shuffle_seed) {
    detail::Rng rng(*plan.shuffle_seed);
    detail::shuffle(order, rng);
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(plan.train_count));
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(plan.train_count), order.end());
  }
  std::vector<SentenceRecord> train, test;
  train.reserve(plan.train_count);
  test.reserve(plan.test_count);
  for (std::size_t k = 0; k < order.size(); ++k) {
    (k < plan.train_count ? train : test).push_back(corpus[order[k]]);
  }
  return {Corpus(std::move(train)), Corpus(std::move(test))};
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  for (const auto& r : corpus.records()) {
    for (const auto& tok : tokenize(r.text)) {
      if (tok.kind != TokenKind::word) continue;
      ++stats.word_frequency[tok.surface];
      ++stats.token_count;
    }
    if (r.polarity) ++stats.polarity_distribution[*r.polarity];
    if (r.emotion) ++stats.emotion_distribution[*r.emotion];
  }
  stats.unique_word_count = stats.word_frequency.size();
  return stats;
}

std::vector<std::pair<std::string, std::size_t>> ranked_frequencies(const CorpusStats& stats) {
  std::vector<std::pair<std::string, std::size_t>> rows(stats.word_frequency.begin(),
                                                        stats.word_frequency.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return rows;
}

void write_frequency_data(const CorpusStats& stats, std::ostream& out) {
  out << "word,count\n";
  for (const auto& [word, count] : ranked_frequencies(stats)) {
    csv::write_row(out, {word, std::to_string(count)});
  }
}

void export_frequency_data(const CorpusStats& stats, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write frequency file " + path.string());
  write_frequency_data(stats, out);
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace nagasent
