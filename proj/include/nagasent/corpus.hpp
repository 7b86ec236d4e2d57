#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagasent/labels.hpp"

namespace nagasent {

struct SentenceRecord {
  std::uint64_t id = 0;
  std::string text;
  std::optional<Polarity> polarity;
  std::optional<Emotion> emotion;

  bool has_labels() const noexcept { return polarity.has_value() && emotion.has_value(); }

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

/// An ordered, validated list of sentence records. Ids are strictly
/// increasing and texts are non-blank; `labeled()` holds iff every record
/// carries both labels.
class Corpus {
 public:
  Corpus() = default;

  /// Validates the invariants above; throws InputError on violation.
  explicit Corpus(std::vector<SentenceRecord> records);

  const std::vector<SentenceRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  bool labeled() const noexcept { return labeled_; }

  const SentenceRecord& operator[](std::size_t i) const noexcept { return records_[i]; }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::vector<SentenceRecord> records_;
  bool labeled_ = false;
};

inline constexpr const char* kCorpusHeader = "id,text,polarity,emotion";

/// Reads a corpus CSV (`id,text,polarity,emotion`). When `expect_labels` is
/// set every row must carry both labels. Errors name the offending line.
Corpus load_corpus(const std::filesystem::path& path, bool expect_labels);
Corpus parse_corpus(std::istream& in, bool expect_labels);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

struct SplitPlan {
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  std::optional<std::uint64_t> shuffle_seed;  // absent: file-order prefix/suffix
};

struct CorpusSplit {
  Corpus train;
  Corpus test;
};

/// Partitions the corpus. Without a seed the first `train_count` records
/// form the training set. With a seed the records are shuffled
/// deterministically first; each half keeps ascending id order.
CorpusSplit split_corpus(const Corpus& corpus, const SplitPlan& plan);

struct CorpusStats {
  std::size_t token_count = 0;  // word tokens only
  std::size_t unique_word_count = 0;
  std::map<std::string, std::size_t> word_frequency;
  std::map<Polarity, std::size_t> polarity_distribution;
  std::map<Emotion, std::size_t> emotion_distribution;
};

CorpusStats corpus_stats(const Corpus& corpus);

/// Word frequencies ordered by descending count, ties lexicographic.
std::vector<std::pair<std::string, std::size_t>> ranked_frequencies(const CorpusStats& stats);

/// Writes `word,count` CSV rows in `ranked_frequencies` order.
void export_frequency_data(const CorpusStats& stats, const std::filesystem::path& path);
void write_frequency_data(const CorpusStats& stats, std::ostream& out);

}  // namespace nagasent
