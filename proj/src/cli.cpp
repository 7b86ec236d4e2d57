#include "nagasent/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "nagasent/corpus.hpp"
#include "nagasent/csv.hpp"
#include "nagasent/error.hpp"
#include "nagasent/eval.hpp"
#include "nagasent/features.hpp"
#include "nagasent/lexicon.hpp"
#include "nagasent/model_io.hpp"
#include "nagasent/synthetic.hpp"
#include "nagasent/tokenizer.hpp"

#ifndef NAGASENT_DATA_DIR
#define NAGASENT_DATA_DIR "data"
#endif

namespace nagasent::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string data_file(const char* name) {
  const char* env = std::getenv("NAGASENT_DATA_DIR");
  return (fs::path(env != nullptr && *env != '\0' ? env : NAGASENT_DATA_DIR) / name).string();
}

struct Options {
  std::string corpus;
  std::string lexicon = data_file("seed_lexicon.tsv");
  std::string intensity = data_file("intensity_starter.tsv");
  std::string features = "best";
  std::string task = "polarity";
  std::string model_kind = "svm";
  std::string kernel;  // empty: rbf for polarity, poly for emotion
  double c_penalty = 1.0;
  int degree = 3;
  std::string gamma = "auto";
  double coef0 = 0.0;
  double tol = 1e-3;
  std::int64_t max_iter = -1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool json = false;
  bool standardize = false;
  bool require_labels = false;
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  std::size_t n = 594;
  std::size_t top = 10;
  std::string out;
  std::string model_path;
  std::string manifest;
  std::string freq_out;
  std::string train_out;
  std::string test_out;
  std::string report_out;
  std::string input;
  std::string out_dir;
};

FeatureSetChoice feature_choice(const std::string& s) {
  const auto c = parse_feature_set(s);
  if (!c) throw InputError("unknown feature set '" + s + "'");
  return *c;
}

SvmConfig svm_config(const Options& o) {
  SvmConfig c;
  c.c_penalty = o.c_penalty;
  const std::string kernel = o.kernel.empty() ? (o.task == "emotion" ? "poly" : "rbf") : o.kernel;
  c.kernel = *parse_kernel(kernel);
  c.degree = o.degree;
  if (o.gamma != "auto") {
    try {
      std::size_t used = 0;
      c.gamma = std::stod(o.gamma, &used);
      if (used != o.gamma.size()) throw std::invalid_argument(o.gamma);
    } catch (const std::exception&) {
      throw InputError("--gamma must be 'auto' or a number, got '" + o.gamma + "'");
    }
  }
  c.coef0 = o.coef0;
  c.tol = o.tol;
  c.max_iterations = o.max_iter;
  c.seed = o.seed;
  c.validate();
  return c;
}

std::vector<std::string> task_labels(const std::string& task) {
  std::vector<std::string> out;
  if (task == "emotion") {
    for (Emotion e : kAllEmotions) out.emplace_back(to_string(e));
  } else {
    for (Polarity p : kAllPolarities) out.emplace_back(to_string(p));
  }
  return out;
}

std::vector<std::string> labels_for(const FeaturizedCorpus& fc, const std::string& task) {
  std::vector<std::string> out;
  if (task == "emotion") {
    for (Emotion e : fc.emotion_labels) out.emplace_back(to_string(e));
  } else {
    for (Polarity p : fc.polarity_labels) out.emplace_back(to_string(p));
  }
  return out;
}

struct Lexicons {
  PolarityLexicon polarity;
  IntensityLexicon intensity;
};

Lexicons load_lexicons(const Options& o) {
  return {load_polarity_lexicon(o.lexicon), load_intensity_lexicon(o.intensity)};
}

SplitPlan split_plan(const Options& o, std::size_t size) {
  SplitPlan s;
  s.test_count = o.test_count;
  s.train_count = o.train_count;
  if (s.train_count == 0 && s.test_count == 0) s.test_count = 100;
  if (s.train_count == 0 && s.test_count < size) s.train_count = size - s.test_count;
  if (s.test_count == 0 && s.train_count < size) s.test_count = size - s.train_count;
  if (o.seed_given) s.shuffle_seed = o.seed;
  return s;
}

json manifest_json(const Options& o, const SplitPlan& plan, const CorpusSplit& split) {
  std::vector<std::uint64_t> train_ids, test_ids;
  for (const auto& r : split.train.records()) train_ids.push_back(r.id);
  for (const auto& r : split.test.records()) test_ids.push_back(r.id);
  return {{"format_version", 1},
          {"corpus", o.corpus},
          {"train_count", plan.train_count},
          {"test_count", plan.test_count},
          {"shuffle_seed", plan.shuffle_seed ? json(*plan.shuffle_seed) : json(nullptr)},
          {"train_ids", train_ids},
          {"test_ids", test_ids}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("write failed for " + path);
}

Corpus select_ids(const Corpus& corpus, const std::set<std::uint64_t>& ids) {
  std::vector<SentenceRecord> out;
  for (const auto& r : corpus.records()) {
    if (ids.contains(r.id)) out.push_back(r);
  }
  if (out.size() != ids.size()) throw InputError("manifest lists ids missing from the corpus");
  return Corpus(std::move(out));
}

std::set<std::uint64_t> manifest_ids(const std::string& path, const char* key) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open manifest " + path);
  try {
    const json doc = json::parse(f);
    const auto ids = doc.at(key).get<std::vector<std::uint64_t>>();
    return {ids.begin(), ids.end()};
  } catch (const json::exception& e) {
    throw InputError("corrupt manifest " + path + ": " + e.what());
  }
}

struct Trained {
  ModelBundle bundle;
  CorpusSplit split;
  SplitPlan plan;
};

Trained train_from_options(const Options& o, std::ostream& err) {
  const Corpus corpus = load_corpus(o.corpus, /*expect_labels=*/true);
  const Lexicons lex = load_lexicons(o);
  const FeatureSetChoice choice = feature_choice(o.features);
  const SplitPlan plan = split_plan(o, corpus.size());
  CorpusSplit split = split_corpus(corpus, plan);

  const FeaturizedCorpus fc =
      featurize_corpus(split.train, lex.polarity, lex.intensity, choice, /*require_labels=*/true);
  const std::vector<std::string> labels = labels_for(fc, o.task);

  ModelBundle bundle{NbModel{}, choice, o.task, std::nullopt};
  Matrix x = fc.matrix;
  if (o.standardize) {
    bundle.scaler = Standardizer::fit(x);
    x = bundle.scaler->transform(x);
  }
  if (o.model_kind == "nb") {
    bundle.model = nb_fit(x, labels);
  } else {
    const std::vector<std::string> all = task_labels(o.task);
    bundle.model = svm_fit(x, labels, svm_config(o), all);
  }
  err << "trained " << bundle.kind() << " " << o.task << " model on " << split.train.size()
      << " sentences (" << feature_count(choice) << " features)\n";
  return {std::move(bundle), std::move(split), plan};
}

EvalReport evaluate_bundle(const ModelBundle& bundle, const Corpus& test, const Lexicons& lex,
                           FeatureSetChoice choice) {
  if (feature_count(choice) != bundle.feature_count()) {
    throw InputError("feature dimension mismatch: model expects " +
                     std::to_string(bundle.feature_count()) + " features (" +
                     std::string(to_string(bundle.feature_set)) + "), featurization gives " +
                     std::to_string(feature_count(choice)) + " (" +
                     std::string(to_string(choice)) + ")");
  }
  const FeaturizedCorpus fc =
      featurize_corpus(test, lex.polarity, lex.intensity, choice, /*require_labels=*/true);
  const std::string task = bundle.task.empty() ? "polarity" : bundle.task;
  const std::vector<std::string> actual = labels_for(fc, task);
  std::vector<std::string> predicted;
  predicted.reserve(actual.size());
  for (std::size_t i = 0; i < fc.matrix.rows(); ++i) {
    predicted.push_back(predict(bundle, fc.matrix.row(i)).front().label);
  }
  return metrics(confusion(actual, predicted, task_labels(task)));
}

void emit_report(const EvalReport& report, const Options& o, std::ostream& out) {
  const std::string text = o.json ? report_to_json(report) + "\n" : render_report(report);
  out << text;
  if (!o.report_out.empty()) write_text(o.report_out, text);
}

// ---- commands ----

int cmd_corpus_stats(const Options& o, std::ostream& out) {
  const Corpus corpus = load_corpus(o.corpus, o.require_labels);
  const CorpusStats stats = corpus_stats(corpus);
  if (o.json) {
    json doc = {{"records", corpus.size()},
                {"token_count", stats.token_count},
                {"unique_word_count", stats.unique_word_count}};
    json pol = json::object(), emo = json::object();
    for (const auto& [p, c] : stats.polarity_distribution) pol[std::string(to_string(p))] = c;
    for (const auto& [e, c] : stats.emotion_distribution) emo[std::string(to_string(e))] = c;
    doc["polarity_distribution"] = pol;
    doc["emotion_distribution"] = emo;
    out << doc.dump(2) << '\n';
  } else {
    out << "records: " << corpus.size() << '\n'
        << "tokens: " << stats.token_count << '\n'
        << "unique words: " << stats.unique_word_count << '\n';
    const auto distribution = [&](const char* name, const auto& dist, const auto& all) {
      std::size_t total = 0;
      for (const auto& [k, c] : dist) total += c;
      if (total == 0) return;
      out << name << " distribution:";
      for (auto k : all) {
        const auto it = dist.find(k);
        const std::size_t c = it == dist.end() ? 0 : it->second;
        char pct[32];
        std::snprintf(pct, sizeof pct, "%.1f%%", 100.0 * static_cast<double>(c) /
                                                     static_cast<double>(total));
        out << ' ' << to_string(k) << '=' << c << " (" << pct << ')';
      }
      out << '\n';
    };
    distribution("polarity", stats.polarity_distribution, kAllPolarities);
    distribution("emotion", stats.emotion_distribution, kAllEmotions);
    const auto ranked = ranked_frequencies(stats);
    out << "top words:";
    for (std::size_t i = 0; i < std::min(o.top, ranked.size()); ++i) {
      out << ' ' << ranked[i].first << '=' << ranked[i].second;
    }
    out << '\n';
  }
  if (!o.freq_out.empty()) export_frequency_data(stats, o.freq_out);
  return kExitOk;
}

int cmd_lexicon_stats(const Options& o, std::ostream& out) {
  const PolarityLexicon lex = load_polarity_lexicon(o.lexicon);
  const auto stats = lexicon_stats(lex);
  if (o.json) {
    json doc = json::object();
    for (const auto& [p, c] : stats) doc[std::string(to_string(p))] = c;
    doc["total"] = lex.size();
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (Polarity p : {Polarity::positive, Polarity::negative, Polarity::neutral}) {
    out << to_string(p) << ' ' << stats.at(p) << '\n';
  }
  out << "total " << lex.size() << '\n';
  return kExitOk;
}

int cmd_featurize(const Options& o, std::ostream& out) {
  const Corpus corpus = load_corpus(o.corpus, /*expect_labels=*/false);
  const Lexicons lex = load_lexicons(o);
  const FeatureSetChoice choice = feature_choice(o.features);
  const bool labeled = corpus.labeled();
  const FeaturizedCorpus fc = featurize_corpus(corpus, lex.polarity, lex.intensity, choice, labeled);

  std::ostringstream text;
  std::vector<std::string> header{"id"};
  for (auto name : feature_names(choice)) header.emplace_back(name);
  if (labeled) {
    header.emplace_back("polarity");
    header.emplace_back("emotion");
  }
  csv::write_row(text, header);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::vector<std::string> row{std::to_string(corpus[i].id)};
    for (double v : fc.matrix.row(i)) row.push_back(std::to_string(static_cast<long long>(v)));
    if (labeled) {
      row.emplace_back(to_string(fc.polarity_labels[i]));
      row.emplace_back(to_string(fc.emotion_labels[i]));
    }
    csv::write_row(text, row);
  }
  if (o.out.empty()) {
    out << text.str();
  } else {
    write_text(o.out, text.str());
  }
  return kExitOk;
}

int cmd_split(const Options& o, std::ostream& out) {
  const Corpus corpus = load_corpus(o.corpus, /*expect_labels=*/false);
  const SplitPlan plan = split_plan(o, corpus.size());
  const CorpusSplit split = split_corpus(corpus, plan);
  save_corpus(split.train, o.train_out);
  save_corpus(split.test, o.test_out);
  if (!o.manifest.empty()) write_text(o.manifest, manifest_json(o, plan, split).dump(1) + "\n");
  out << "train " << split.train.size() << " -> " << o.train_out << '\n'
      << "test " << split.test.size() << " -> " << o.test_out << '\n';
  return kExitOk;
}

int cmd_train(const Options& o, std::ostream& out, std::ostream& err) {
  const Trained t = train_from_options(o, err);
  save_model(t.bundle, o.model_path);
  const std::string manifest = o.manifest.empty() ? o.model_path + ".split.json" : o.manifest;
  write_text(manifest, manifest_json(o, t.plan, t.split).dump(1) + "\n");
  out << "model: " << o.model_path << '\n'
      << "manifest: " << manifest << '\n'
      << "split: " << t.split.train.size() << " train / " << t.split.test.size() << " test\n";
  return kExitOk;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  const ModelBundle bundle = load_model(o.model_path);
  Corpus test = load_corpus(o.corpus, /*expect_labels=*/true);
  if (!o.manifest.empty()) test = select_ids(test, manifest_ids(o.manifest, "test_ids"));
  const Lexicons lex = load_lexicons(o);
  const FeatureSetChoice choice = o.features.empty() ? bundle.feature_set : feature_choice(o.features);
  emit_report(evaluate_bundle(bundle, test, lex, choice), o, out);
  return kExitOk;
}

int cmd_predict(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const ModelBundle bundle = load_model(o.model_path);
  const Lexicons lex = load_lexicons(o);
  std::ifstream file;
  if (!o.input.empty()) {
    file.open(o.input, std::ios::binary);
    if (!file) throw InputError("cannot open input " + o.input);
  }
  std::istream& src = o.input.empty() ? in : file;
  const bool is_svm = bundle.kind() == "svm";
  std::string line;
  std::size_t number = 0;
  char buf[64];
  while (std::getline(src, line)) {
    ++number;
    if (normalize(line).empty()) {
      err << "warning: skipping empty line " << number << '\n';
      continue;
    }
    const auto row = project(extract(tokenize(line), lex.polarity, lex.intensity), bundle.feature_set);
    const auto scores = predict(bundle, row);
    out << scores.front().label << '\t';
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (is_svm) {
        std::snprintf(buf, sizeof buf, "%s=%g(%.6g)", scores[i].label.c_str(), scores[i].score,
                      scores[i].margin);
      } else {
        std::snprintf(buf, sizeof buf, "%s=%.6g", scores[i].label.c_str(), scores[i].score);
      }
      out << (i ? " " : "") << buf;
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_pipeline(const Options& o, std::ostream& out, std::ostream& err) {
  const Trained t = train_from_options(o, err);
  const Lexicons lex = load_lexicons(o);
  const EvalReport report = evaluate_bundle(t.bundle, t.split.test, lex, t.bundle.feature_set);
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    save_model(t.bundle, fs::path(o.out_dir) / "model.json");
    write_text((fs::path(o.out_dir) / "split.json").string(),
               manifest_json(o, t.plan, t.split).dump(1) + "\n");
    write_text((fs::path(o.out_dir) / "report.json").string(), report_to_json(report) + "\n");
  }
  emit_report(report, o, out);
  return kExitOk;
}

int cmd_gen_synthetic(const Options& o, std::ostream& out) {
  const PolarityLexicon lex = load_polarity_lexicon(o.lexicon);
  const SyntheticCorpus s = generate_synthetic_corpus(lex, o.n, o.seed_given ? o.seed : 42);
  if (o.out.empty()) {
    write_corpus(s.corpus, out);
  } else {
    save_corpus(s.corpus, o.out);
    out << "wrote " << s.corpus.size() << " sentences to " << o.out << '\n';
  }
  if (!o.freq_out.empty()) {
    CorpusStats planted;
    planted.word_frequency = s.word_frequency;
    export_frequency_data(planted, o.freq_out);
  }
  return kExitOk;
}

// ---- argument handling ----

// Flat `key=value` config file (keys are long option names). Values are
// inserted as `--key=value` unless the flag already appears on the command
// line, so explicit flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream f(path);
  if (!f) throw InputError("cannot open config file " + path);

  const auto given = [&](const std::string& key) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == "--" + key || a.starts_with("--" + key + "=");
    });
  };
  std::vector<std::string> extra;
  std::string line;
  std::size_t number = 0;
  while (std::getline(f, line)) {
    ++number;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("config " + path + ": expected key=value at line " + std::to_string(number));
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") continue;
    if (!given(key)) extra.push_back("--" + key + "=" + value);
  }
  std::vector<std::string> out(args.begin(), args.begin() + std::min<std::size_t>(2, args.size()));
  out.insert(out.end(), extra.begin(), extra.end());
  if (args.size() > 2) out.insert(out.end(), args.begin() + 2, args.end());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Sentiment polarity and emotion classification toolkit for Nagamese text", "nagasent"};
  app.require_subcommand(1);
  std::string config_path;

  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Flat key=value file of option defaults");
  };
  const auto add_lexicons = [&](CLI::App* sub) {
    sub->add_option("--lexicon", o.lexicon, "Polarity lexicon TSV")->capture_default_str();
    sub->add_option("--intensity", o.intensity, "Intensity lexicon TSV")->capture_default_str();
  };
  const auto add_features = [&](CLI::App* sub, bool defaulted) {
    auto* opt = sub->add_option("--features", o.features, "Feature set")
                    ->check(CLI::IsMember({"full", "best", "full_12", "best_9"}));
    if (defaulted) opt->capture_default_str();
  };
  const auto add_split = [&](CLI::App* sub) {
    sub->add_option("--train-count", o.train_count, "Training sentences (default: rest)");
    sub->add_option("--test-count", o.test_count, "Test sentences (default: 100)");
    sub->add_option("--seed", o.seed, "Split shuffle seed, also seeds SMO (default: file order)")
        ->each([&](const std::string&) { o.seed_given = true; });
  };
  const auto add_model = [&](CLI::App* sub) {
    sub->add_option("--task", o.task)->check(CLI::IsMember({"polarity", "emotion"}))->capture_default_str();
    sub->add_option("--model", o.model_kind)->check(CLI::IsMember({"nb", "svm"}))->capture_default_str();
    sub->add_option("--kernel", o.kernel, "SVM kernel (default: rbf for polarity, poly for emotion)")
        ->check(CLI::IsMember({"linear", "poly", "rbf"}));
    sub->add_option("--C", o.c_penalty, "SVM penalty")->capture_default_str();
    sub->add_option("--degree", o.degree, "Polynomial degree")->capture_default_str();
    sub->add_option("--gamma", o.gamma, "Kernel gamma or 'auto' (1/features)")->capture_default_str();
    sub->add_option("--coef0", o.coef0)->capture_default_str();
    sub->add_option("--tol", o.tol, "SMO KKT tolerance")->capture_default_str();
    sub->add_option("--max-iter", o.max_iter, "SMO iteration bound, -1 unbounded")->capture_default_str();
    sub->add_flag("--standardize", o.standardize, "Standardize features before fitting");
  };
  const auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
  };

  auto* stats = app.add_subcommand("corpus-stats", "Token, vocabulary and label statistics");
  stats->add_option("--corpus", o.corpus)->required();
  stats->add_option("--freq-out", o.freq_out, "Write word,count CSV");
  stats->add_option("--top", o.top, "Number of top words to list")->capture_default_str();
  stats->add_flag("--require-labels", o.require_labels, "Fail unless every row is labeled");
  add_json(stats);
  add_config(stats);

  auto* lexstats = app.add_subcommand("lexicon-stats", "Polarity lexicon category counts");
  add_lexicons(lexstats);
  add_json(lexstats);
  add_config(lexstats);

  auto* featurize = app.add_subcommand("featurize", "Write the feature matrix as CSV");
  featurize->add_option("--corpus", o.corpus)->required();
  featurize->add_option("--out", o.out, "Output CSV (default: stdout)");
  add_lexicons(featurize);
  add_features(featurize, true);
  add_config(featurize);

  auto* split = app.add_subcommand("split", "Split a corpus into train and test files");
  split->add_option("--corpus", o.corpus)->required();
  split->add_option("--train-out", o.train_out)->required();
  split->add_option("--test-out", o.test_out)->required();
  split->add_option("--manifest-out", o.manifest, "Write split manifest JSON");
  add_split(split);
  add_config(split);

  auto* train = app.add_subcommand("train", "Split, featurize and fit a model");
  train->add_option("--corpus", o.corpus)->required();
  train->add_option("--model-out", o.model_path)->required();
  train->add_option("--manifest-out", o.manifest, "Split manifest (default: <model-out>.split.json)");
  add_lexicons(train);
  add_features(train, true);
  add_split(train);
  add_model(train);
  add_config(train);

  auto* evaluate = app.add_subcommand("evaluate", "Report metrics of a model on labeled data");
  std::string eval_features;
  evaluate->add_option("--model", o.model_path)->required();
  evaluate->add_option("--corpus", o.corpus)->required();
  evaluate->add_option("--manifest", o.manifest, "Evaluate only the manifest's test ids");
  evaluate->add_option("--report-out", o.report_out, "Also write the report to this file");
  evaluate->add_option("--features", eval_features, "Feature set (default: the model's)")
      ->check(CLI::IsMember({"full", "best", "full_12", "best_9"}));
  add_lexicons(evaluate);
  add_json(evaluate);
  add_config(evaluate);

  auto* predict_cmd = app.add_subcommand("predict", "Classify sentences, one per line");
  predict_cmd->add_option("--model", o.model_path)->required();
  predict_cmd->add_option("--input", o.input, "Input file (default: stdin)");
  add_lexicons(predict_cmd);
  add_config(predict_cmd);

  auto* pipeline = app.add_subcommand("pipeline", "Train and evaluate on one split");
  pipeline->add_option("--corpus", o.corpus)->required();
  pipeline->add_option("--out-dir", o.out_dir, "Save model, manifest and JSON report here");
  pipeline->add_option("--report-out", o.report_out, "Also write the report to this file");
  add_lexicons(pipeline);
  add_features(pipeline, true);
  add_split(pipeline);
  add_model(pipeline);
  add_json(pipeline);
  add_config(pipeline);

  auto* gen = app.add_subcommand("gen-synthetic", "Generate a planted-signal labeled corpus");
  gen->add_option("--n", o.n, "Number of sentences")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Generator seed (default: 42)")
      ->each([&](const std::string&) { o.seed_given = true; });
  gen->add_option("--out", o.out, "Output CSV (default: stdout)");
  gen->add_option("--freq-out", o.freq_out, "Write the generator's word,count table");
  gen->add_option("--lexicon", o.lexicon, "Polarity lexicon TSV")->capture_default_str();
  add_config(gen);

  try {
    std::vector<std::string> expanded = expand_config(args);
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend() - 1);
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitInput;
    }

    if (*stats) return cmd_corpus_stats(o, out);
    if (*lexstats) return cmd_lexicon_stats(o, out);
    if (*featurize) return cmd_featurize(o, out);
    if (*split) return cmd_split(o, out);
    if (*train) return cmd_train(o, out, err);
    if (*evaluate) {
      o.features = eval_features;
      return cmd_evaluate(o, out);
    }
    if (*predict_cmd) return cmd_predict(o, in, out, err);
    if (*pipeline) return cmd_pipeline(o, out, err);
    if (*gen) return cmd_gen_synthetic(o, out);
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace nagasent::cli
