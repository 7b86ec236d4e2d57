// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>

#include "golden_features.hpp"
#include "nagasent/cli.hpp"
#include "nagasent/error.hpp"
#include "nagasent/eval.hpp"
#include "nagasent/features.hpp"
#include "nagasent/labels.hpp"
#include "nagasent/model_io.hpp"
#include "nagasent/naive_bayes.hpp"
#include "nagasent/svm.hpp"
#include "oracles.hpp"

using namespace nagasent;

namespace {

const std::string kData = NAGASENT_TEST_DATA_DIR;

// Collects the first failure message of a criterion.
struct Check {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

bool ac1_metric_reconstruction(Check& check) {
  const auto diag = oracle::diagonals_from_recalls({6, 13, 10}, {0.54, 0.68, 0.78}, 100, 0.005);
  check(diag.size() == 1 && diag[0] == std::vector<int>{7, 28, 36}, "diagonal search not unique");
  const auto m = confusion_from_counts({"negative", "neutral", "positive"},
                                       {{7, 4, 2}, {2, 28, 11}, {2, 8, 36}});
  const EvalReport r = metrics(m);
  check(r.accuracy == 0.71, "accuracy != 0.71");
  const char* table[3][3] = {{"0.64", "0.54", "0.58"}, {"0.70", "0.68", "0.69"}, {"0.73", "0.78", "0.76"}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = r.per_class[i];
    check(format_2dp(c.precision) == table[i][0], m.labels[i] + " precision " + format_2dp(c.precision));
    check(format_2dp(c.recall) == table[i][1], m.labels[i] + " recall " + format_2dp(c.recall));
    check(format_2dp(c.f1) == table[i][2], m.labels[i] + " f1 " + format_2dp(c.f1));
  }
  return check.failure.empty();
}

bool ac2_edge_semantics(Check& check) {
  std::vector<std::string> labels;
  for (Emotion e : kAllEmotions) labels.emplace_back(to_string(e));
  std::vector<std::string> actual, predicted;
  const auto add = [&](const char* a, const char* p, int n) {
    for (int i = 0; i < n; ++i) actual.emplace_back(a), predicted.emplace_back(p);
  };
  add("fear", "fear", 4);
  add("surprise", "surprise", 2);
  add("trust", "joy", 3);
  add("joy", "joy", 5);
  add("joy", "anticipation", 1);
  add("anger", "sadness", 2);
  add("sadness", "sadness", 3);
  add("disgust", "anger", 1);
  add("anticipation", "anticipation", 6);
  const EvalReport r = metrics(confusion(actual, predicted, labels));
  const auto row = [&](const std::string& name) {
    return r.per_class[static_cast<std::size_t>(std::find(labels.begin(), labels.end(), name) -
                                                labels.begin())];
  };
  const auto t = row("trust");
  check(format_2dp(t.precision) == "0.00" && format_2dp(t.recall) == "0.00" &&
            format_2dp(t.f1) == "0.00",
        "trust row not all zero");
  for (const char* name : {"fear", "surprise"}) {
    const auto c = row(name);
    check(format_2dp(c.precision) == "1.00" && format_2dp(c.recall) == "1.00" &&
              format_2dp(c.f1) == "1.00",
          std::string(name) + " row not all one");
  }
  return check.failure.empty();
}

bool ac3_nb_oracle(Check& check) {
  std::mt19937_64 rng(20240301);
  for (int ds = 0; ds < 50; ++ds) {
    const std::size_t n = 10 + rng() % 41;
    const std::size_t d = 1 + rng() % 9;
    std::vector<std::vector<double>> x;
    std::vector<std::string> y;
    oracle::random_three_class(rng, n, d, x, y);
    const NbModel m = nb_fit(Matrix::from_rows(x), y);
    const oracle::NbParams p = oracle::nb_params(x, y);
    for (const auto& row : x) {
      const auto expected = oracle::nb_posterior(p, row);
      check(nb_predict(m, row).front().label == p.labels[oracle::argmax(expected)],
            "argmax disagrees on dataset " + std::to_string(ds));
      double sum = 0.0;
      for (double v : nb_posteriors(m, row)) sum += v;
      check(std::abs(sum - 1.0) <= 1e-9, "posterior sum " + std::to_string(sum));
    }
  }
  return check.failure.empty();
}

double train_accuracy(const oracle::BinaryProblem& p, const SvmConfig& c) {
  const PairFit fit = svm_fit_pair(Matrix::from_rows(p.x), p.y, c);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    ok += ((decision_value(fit.machine, c, p.x[i]) > 0) ? 1 : -1) == p.y[i];
  }
  return static_cast<double>(ok) / static_cast<double>(p.x.size());
}

bool ac4_svm_validity(Check& check) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 8 + rng() % 53;
    const std::size_t d = 1 + rng() % 9;
    const auto p = oracle::random_binary_problem(rng, n, d);
    SvmConfig c;
    c.kernel = static_cast<KernelType>(trial % 3);
    c.coef0 = 1.0;
    c.tol = 0.001;
    c.c_penalty = 1.0;
    c.seed = static_cast<std::uint64_t>(trial);
    SmoTrace trace;
    const PairFit fit = svm_fit_pair(Matrix::from_rows(p.x), p.y, c, &trace);
    const oracle::Kernel k = static_cast<oracle::Kernel>(trial % 3);
    const double gamma = c.resolved_gamma(d);
    double sum_ay = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      check(fit.alpha[i] >= 0.0 && fit.alpha[i] <= 1.0, "alpha outside [0, C]");
      sum_ay += fit.alpha[i] * p.y[i];
      double f = fit.machine.intercept;
      for (std::size_t j = 0; j < n; ++j) {
        f += fit.alpha[j] * p.y[j] * oracle::kernel(k, p.x[j], p.x[i], gamma, c.coef0, c.degree);
      }
      const double v = oracle::kkt_violation(fit.alpha[i], 1.0, p.y[i] * f, 0.0);
      check(v <= 0.001, "KKT violation " + std::to_string(v) + " in trial " + std::to_string(trial));
    }
    check(std::abs(sum_ay) <= 1e-6, "sum alpha*y = " + std::to_string(sum_ay));
    for (std::size_t t = 1; t < trace.objective.size(); ++t) {
      check(trace.objective[t] >= trace.objective[t - 1] - 1e-12 * std::abs(trace.objective[t - 1]),
            "dual objective decreased in trial " + std::to_string(trial));
    }
  }
  SvmConfig linear;
  linear.kernel = KernelType::linear;
  const oracle::BinaryProblem blobs{{{2, 0}, {1, 1}, {1.5, -1}, {-2, 0}, {-1, 1}, {-1.5, -1}},
                                    {1, 1, 1, -1, -1, -1}};
  check(train_accuracy(blobs, linear) == 1.0, "linear blobs not separated");
  const oracle::BinaryProblem xr{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {-1, -1, 1, 1}};
  SvmConfig rbf;
  rbf.kernel = KernelType::rbf;
  rbf.gamma = 1.0;
  check(train_accuracy(xr, rbf) == 1.0, "rbf XOR below 100%");
  check(train_accuracy(xr, linear) < 1.0, "linear XOR reached 100%");
  return check.failure.empty();
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nagasent");
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool ac5_planted_signal(Check& check) {
  const auto dir = oracle::temp_dir("acceptance");
  const std::string corpus = (dir / "synthetic.csv").string();
  const std::string lexicon = kData + "/seed_lexicon.tsv";
  const auto gen = cli({"gen-synthetic", "--n", "594", "--seed", "42", "--lexicon", lexicon,
                        "--out", corpus});
  check(gen.code == 0, "gen-synthetic failed: " + gen.err);
  if (gen.code != 0) return false;

  const std::vector<std::string> common{"pipeline",     "--corpus", corpus, "--lexicon", lexicon,
                                        "--train-count", "494",    "--test-count", "100",
                                        "--features",   "best",     "--json"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a = common;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  const auto svm_args = with({"--model", "svm", "--kernel", "rbf", "--C", "1.0", "--gamma", "auto",
                              "--tol", "0.001"});
  const auto nb_args = with({"--model", "nb"});
  const auto svm1 = cli(svm_args);
  const auto svm2 = cli(svm_args);
  const auto nb1 = cli(nb_args);
  const auto nb2 = cli(nb_args);
  check(svm1.code == 0 && nb1.code == 0, "pipeline failed: " + svm1.err + nb1.err);
  if (!check.failure.empty()) return false;
  check(svm1.out == svm2.out && nb1.out == nb2.out, "pipeline output differs between runs");
  const double svm_acc = nlohmann::json::parse(svm1.out)["accuracy"].get<double>();
  const double nb_acc = nlohmann::json::parse(nb1.out)["accuracy"].get<double>();
  std::printf("      svm accuracy %.2f, nb accuracy %.2f\n", svm_acc, nb_acc);
  check(svm_acc >= 0.90, "svm accuracy " + format_2dp(svm_acc) + " < 0.90");
  check(nb_acc >= 0.70, "nb accuracy " + format_2dp(nb_acc) + " < 0.70");
  return check.failure.empty();
}

bool ac6_feature_goldens(Check& check) {
  const PolarityLexicon plex = load_polarity_lexicon(kData + "/seed_lexicon.tsv");
  const IntensityLexicon ilex = load_intensity_lexicon(kData + "/intensity_starter.tsv");
  check(golden::kFeatureGolden.size() == 21, "expected 21 golden sentences");
  for (const auto& [text, expected] : golden::kFeatureGolden) {
    check(extract(tokenize(text), plex, ilex).values() == expected, "mismatch for '" + text + "'");
  }
  const auto full = feature_names(FeatureSetChoice::full_12);
  const auto best = feature_names(FeatureSetChoice::best_9);
  std::vector<std::string_view> dropped;
  for (auto name : full) {
    if (std::find(best.begin(), best.end(), name) == best.end()) dropped.push_back(name);
  }
  check(best.size() == 9 &&
            dropped == std::vector<std::string_view>{"sentence_length", "neu_word_count", "has_question"},
        "best_9 drops the wrong features");
  const auto v = extract(tokenize("bisi bhal! ☺"), plex, ilex);
  check(project(v, FeatureSetChoice::best_9) == std::vector<double>{1, 0, 1, 0, 1, 0, 1, 0, 1},
        "best_9 projection of the worked example");
  return check.failure.empty();
}

bool ac7_persistence(Check& check) {
  std::mt19937_64 rng(77);
  std::vector<std::vector<double>> x;
  std::vector<std::string> y;
  oracle::random_three_class(rng, 60, 9, x, y);
  const Matrix m = Matrix::from_rows(x);
  SvmConfig rbf;
  const std::vector<ModelBundle> bundles{
      {nb_fit(m, y), FeatureSetChoice::best_9, "polarity", std::nullopt},
      {svm_fit(m, y, rbf), FeatureSetChoice::best_9, "polarity", std::nullopt}};
  std::normal_distribution<double> g(0.0, 2.0);
  std::vector<std::vector<double>> rows(100, std::vector<double>(9));
  for (auto& r : rows) {
    for (auto& v : r) v = g(rng);
  }
  const auto dir = oracle::temp_dir("acceptance_model");
  for (const auto& b : bundles) {
    save_model(b, dir / "model.json");
    const ModelBundle loaded = load_model(dir / "model.json");
    for (const auto& r : rows) {
      const auto a = predict(b, r);
      const auto c = predict(loaded, r);
      bool same = a.size() == c.size();
      for (std::size_t i = 0; same && i < a.size(); ++i) {
        same = a[i].label == c[i].label && std::memcmp(&a[i].score, &c[i].score, sizeof(double)) == 0 &&
               std::memcmp(&a[i].margin, &c[i].margin, sizeof(double)) == 0;
      }
      check(same, std::string(b.kind()) + " prediction changed after reload");
    }
  }
  return check.failure.empty();
}

bool ac8_lexicon_integrity(Check& check) {
  std::ifstream f(kData + "/seed_lexicon.tsv", std::ios::binary);
  std::ostringstream seed;
  seed << f.rdbuf();
  std::istringstream in(oracle::full_scale_lexicon_tsv(seed.str()));
  const PolarityLexicon lex = parse_polarity_lexicon(in);
  const auto stats = lexicon_stats(lex);
  check(stats.at(Polarity::positive) == 162, "positive count");
  check(stats.at(Polarity::negative) == 162, "negative count");
  check(stats.at(Polarity::neutral) == 871, "neutral count");
  check(lex.size() == 1195, "total count");
  const auto rejects = [](const std::string& text) {
    std::istringstream s(text);
    try {
      parse_polarity_lexicon(s);
    } catch (const InputError&) {
      return true;
    }
    return false;
  };
  check(rejects("bhal\tpositive\nbhal\tpositive\n"), "duplicate word accepted");
  check(rejects("bhal\tpositive\nbhal\tnegative\n"), "dual-category word accepted");
  check(rejects("bhal\tpositive\nBHAL\tnegative\n"), "case-folded dual category accepted");
  return check.failure.empty();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(Check&)> fn;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"AC1 metric reconstruction", ac1_metric_reconstruction, 1},
      {"AC2 zero and perfect class rows", ac2_edge_semantics, 1},
      {"AC3 naive Bayes oracle equivalence", ac3_nb_oracle, 10},
      {"AC4 SVM optimizer validity", ac4_svm_validity, 30},
      {"AC5 planted-signal pipeline", ac5_planted_signal, 60},
      {"AC6 feature golden vectors", ac6_feature_goldens, 1},
      {"AC7 model persistence round trip", ac7_persistence, 5},
      {"AC8 lexicon integrity", ac8_lexicon_integrity, 1},
  };
  int failed = 0;
  for (const auto& [name, fn, budget] : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn(check);
    } catch (const std::exception& e) {
      check.failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget && check.failure.empty()) {
      check.failure = "over the " + std::to_string(static_cast<int>(budget)) + "s budget";
    }
    ok = ok && check.failure.empty();
    std::printf("%s  %-38s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                ok ? "" : "  ", check.failure.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
