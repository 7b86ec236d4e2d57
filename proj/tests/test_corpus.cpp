#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "nagasent/corpus.hpp"
#include "nagasent/error.hpp"
#include "nagasent/tokenizer.hpp"
#include "oracles.hpp"

using namespace nagasent;

namespace {

Corpus parse(const std::string& text, bool labels = true) {
  std::istringstream in(text);
  return parse_corpus(in, labels);
}

std::string error_of(const std::string& text, bool labels = true) {
  try {
    parse(text, labels);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

Corpus numbered(std::size_t n) {
  std::vector<SentenceRecord> recs;
  for (std::size_t i = 0; i < n; ++i) {
    recs.push_back({i + 1, "sentence " + std::to_string(i), Polarity::neutral, Emotion::trust});
  }
  return Corpus(std::move(recs));
}

}  // namespace

TEST_CASE("labels parse case-insensitively and serialize lowercase") {
  CHECK(parse_polarity("Positive") == Polarity::positive);
  CHECK(parse_polarity(" NEUTRAL ") == Polarity::neutral);
  CHECK_FALSE(parse_polarity("posative"));
  CHECK(parse_emotion("Anticipation") == Emotion::anticipation);
  CHECK_FALSE(parse_emotion("happiness"));
  CHECK(to_string(Emotion::surprise) == "surprise");
  for (Polarity p : kAllPolarities) CHECK(parse_polarity(to_string(p)) == p);
  for (Emotion e : kAllEmotions) CHECK(parse_emotion(to_string(e)) == e);
}

TEST_CASE("load_corpus reads a labeled three-row file") {
  const Corpus c = parse(
      "id,text,polarity,emotion\n"
      "1,Moy bhal ase.,positive,joy\n"
      "2,\"Biya, larai!\",negative,sadness\n"
      "3,Moy ghar jabo,neutral,trust\n");
  REQUIRE(c.size() == 3);
  CHECK(c.labeled());
  CHECK(c[1].text == "Biya, larai!");
  CHECK(c[1].polarity == Polarity::negative);
  CHECK(c[2].emotion == Emotion::trust);
}

TEST_CASE("load_corpus errors name the line") {
  CHECK(error_of("id,text,polarity,emotion\n1,ok,positive,joy\n2,bad,posative,joy\n")
            .find("unknown polarity 'posative' at line 3") != std::string::npos);
  CHECK(error_of("id,text,polarity,emotion\n1,a,b\n").find("malformed row at line 2") !=
        std::string::npos);
  CHECK(error_of("id,text,polarity,emotion\n1,x,positive,glee\n").find("unknown emotion 'glee'") !=
        std::string::npos);
  CHECK(error_of("") == "empty corpus file");
  CHECK_FALSE(error_of("id,text,polarity,emotion\n1,x,,\n").empty());
  CHECK(error_of("id,text,polarity,emotion\n1,x,,\n", false).empty());
  CHECK(error_of("id,text,polarity,emotion\n2,x,,\n1,y,,\n", false).find("line 3") !=
        std::string::npos);
  CHECK(error_of("id,text,polarity,emotion\n1,   ,,\n", false).find("empty text") !=
        std::string::npos);
  CHECK(error_of("id,text\n1,x\n").find("header") != std::string::npos);
}

TEST_CASE("line numbers account for quoted newlines") {
  const std::string text =
      "id,text,polarity,emotion\n"
      "1,\"two\nlines\",positive,joy\n"
      "2,x,positive,jooy\n";
  CHECK(error_of(text).find("at line 4") != std::string::npos);
}

TEST_CASE("unlabeled corpora load when labels are not expected") {
  const Corpus c = parse("id,text,polarity,emotion\n1,moy,,\n2,bhal,,\n", false);
  CHECK(c.size() == 2);
  CHECK_FALSE(c.labeled());
}

TEST_CASE("save/load round trip is identity on records") {
  std::mt19937 rng(5);
  const std::vector<std::string> pieces{"moy", "bhal", "\"quoted\"", "a,b", "line\nbreak", "☺",
                                        "kile?", "ase"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SentenceRecord> recs;
    std::uint64_t id = 0;
    for (int i = 0; i < 15; ++i) {
      id += 1 + rng() % 3;
      std::string text = pieces[rng() % pieces.size()];
      for (int k = 0; k < 3; ++k) text += " " + pieces[rng() % pieces.size()];
      SentenceRecord r{id, text, std::nullopt, std::nullopt};
      if (rng() % 4) r.polarity = kAllPolarities[rng() % 3];
      if (rng() % 4) r.emotion = kAllEmotions[rng() % 8];
      recs.push_back(r);
    }
    const Corpus original(recs);
    std::ostringstream out;
    write_corpus(original, out);
    CHECK(parse(out.str(), false) == original);
  }
}

TEST_CASE("split_corpus") {
  const Corpus c594 = numbered(594);
  SUBCASE("order-preserving 494/100") {
    const auto s = split_corpus(c594, {494, 100, std::nullopt});
    REQUIRE(s.train.size() == 494);
    REQUIRE(s.test.size() == 100);
    CHECK(s.train[0].id == 1);
    CHECK(s.train[493].id == 494);
    CHECK(s.test[0].id == 495);
    CHECK(s.test[99].id == 594);
  }
  SUBCASE("seeded split is deterministic") {
    const Corpus c10 = numbered(10);
    const auto a = split_corpus(c10, {5, 5, 7});
    const auto b = split_corpus(c10, {5, 5, 7});
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);
  }
  SUBCASE("counts must sum to the corpus size") {
    CHECK_THROWS_AS(split_corpus(numbered(10), {9, 2, std::nullopt}), InputError);
    CHECK_THROWS_AS(split_corpus(numbered(10), {10, 0, std::nullopt}), InputError);
  }
  SUBCASE("partition property") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const std::size_t n = 2 + seed % 40;
      const std::size_t train = 1 + seed % (n - 1);
      const auto s = split_corpus(numbered(n), {train, n - train, seed});
      std::set<std::uint64_t> ids;
      for (const auto& r : s.train.records()) ids.insert(r.id);
      for (const auto& r : s.test.records()) CHECK_FALSE(ids.contains(r.id));
      for (const auto& r : s.test.records()) ids.insert(r.id);
      CHECK(ids.size() == n);
      CHECK(s.train.size() + s.test.size() == n);
    }
  }
}

TEST_CASE("corpus_stats") {
  SUBCASE("one sentence") {
    const auto s = corpus_stats(Corpus({{1, "moy bhal ase", {}, {}}}));
    CHECK(s.token_count == 3);
    CHECK(s.unique_word_count == 3);
  }
  SUBCASE("repeated words") {
    const auto s = corpus_stats(Corpus({{1, "bhal bhal", {}, {}}, {2, "Bhal!", {}, {}}}));
    CHECK(s.word_frequency == std::map<std::string, std::size_t>{{"bhal", 3}});
    CHECK(s.unique_word_count == 1);
    CHECK(s.token_count == 3);
  }
  SUBCASE("label distributions") {
    std::vector<SentenceRecord> recs;
    for (int i = 0; i < 20; ++i) {
      const Polarity p = i < 10 ? Polarity::positive : i < 15 ? Polarity::negative : Polarity::neutral;
      recs.push_back({static_cast<std::uint64_t>(i + 1), "moy", p, Emotion::joy});
    }
    const auto s = corpus_stats(Corpus(recs));
    CHECK(s.polarity_distribution.at(Polarity::positive) == 10);
    CHECK(s.polarity_distribution.at(Polarity::negative) == 5);
    CHECK(s.polarity_distribution.at(Polarity::neutral) == 5);
    CHECK(s.emotion_distribution.at(Emotion::joy) == 20);
  }
  SUBCASE("token count is the sum of per-record word counts") {
    const Corpus c({{1, "Moy dos baje pora yeti ase.", {}, {}},
                    {2, "bisi bhal! ☺ :)", {}, {}},
                    {3, "kile? kile", {}, {}}});
    std::size_t expected = 0;
    for (const auto& r : c.records()) expected += word_count(tokenize(r.text));
    const auto s = corpus_stats(c);
    CHECK(s.token_count == expected);
    std::size_t sum = 0;
    for (const auto& [w, n] : s.word_frequency) sum += n;
    CHECK(sum == s.token_count);
  }
}

TEST_CASE("frequency export ordering") {
  CorpusStats s;
  s.word_frequency = {{"bhal", 3}, {"ase", 3}, {"biya", 1}};
  std::ostringstream out;
  write_frequency_data(s, out);
  CHECK(out.str() == "word,count\nase,3\nbhal,3\nbiya,1\n");

  std::ostringstream empty;
  write_frequency_data(CorpusStats{}, empty);
  CHECK(empty.str() == "word,count\n");

  const auto dir = oracle::temp_dir("freq");
  export_frequency_data(s, dir / "f.csv");
  CHECK(std::filesystem::file_size(dir / "f.csv") == out.str().size());
  CHECK_THROWS_AS(export_frequency_data(s, dir / "missing" / "f.csv"), InputError);
  std::filesystem::remove_all(dir);
}
