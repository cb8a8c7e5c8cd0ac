#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "fakenews/bundle.hpp"
#include "fakenews/corpus.hpp"
#include "fakenews/error.hpp"
#include "fakenews/eval.hpp"
#include "fakenews/features.hpp"
#include "fakenews/preprocess.hpp"
#include "report.hpp"

#ifndef FAKENEWS_VERSION
#define FAKENEWS_VERSION "0.0.0"
#endif

namespace fakenews::cli {
namespace {

namespace fs = std::filesystem;

struct DatasetOptions {
  std::string path;
  std::string id_col;
  std::string title_col = "title";
  std::string text_col = "text";
  std::string label_col = "label";
  std::string delimiter = ",";
  std::string label_map;
};

struct SplitOptions {
  std::optional<double> test_fraction;
  std::optional<std::uint64_t> seed;
  bool no_stratify = false;
};

struct PipelineOptions {
  bool no_lowercase = false;
  bool no_stopwords = false;
  std::string stopwords{kDefaultStopwordList};
  std::string stopwords_file;
  bool no_stem = false;
  std::size_t min_token_length = 2;
};

struct FeatureOptions {
  std::size_t min_df = 2;
  std::optional<std::size_t> max_features;
  std::string weighting = "tfidf";
  bool no_l2 = false;
};

struct TrainOptions {
  DatasetOptions data;
  SplitOptions split;
  PipelineOptions pipeline;
  FeatureOptions features;
  std::string model = "pa";
  std::uint64_t seed = 42;
  int epochs = 10;
  double aggressiveness = 1.0;
  double lambda = 1e-4;
  double eta0 = 0.1;
  double alpha = 1.0;
  bool no_shuffle = false;
  std::string timestamp;
  std::string out;
};

struct EvaluateOptions {
  std::string bundle;
  DatasetOptions data;
  SplitOptions split;
  std::string format = "table";
  std::string out;
  bool enforce_baseline = false;
  std::string vectors_cache;
  std::string predictions_out;
};

struct PredictOptions {
  std::string bundle;
  std::string input;
  std::string input_format = "lines";
  DatasetOptions data;
  std::string format = "table";
  bool diagnostics = false;
};

struct CompareOptions {
  std::vector<std::string> bundles;
  DatasetOptions data;
  SplitOptions split;
  std::string format = "table";
  std::string out;
};

struct TopTermsOptions {
  DatasetOptions data;
  PipelineOptions pipeline;
  FeatureOptions features;
  std::size_t k = 10;
  bool per_class = false;
  std::string format = "table";
};

struct StatsOptions {
  DatasetOptions data;
  std::string format = "table";
};

void add_dataset_options(CLI::App* cmd, DatasetOptions& o, bool required = true) {
  auto* data = cmd->add_option("--data", o.path, "Delimiter-separated dataset with a header row");
  if (required) data->required();
  cmd->add_option("--id-col", o.id_col, "Id column (default: synthesize row-<n>)");
  cmd->add_option("--title-col", o.title_col, "Title column")->capture_default_str();
  cmd->add_option("--text-col", o.text_col, "Body text column")->capture_default_str();
  cmd->add_option("--label-col", o.label_col, "Label column")->capture_default_str();
  cmd->add_option("--delimiter", o.delimiter, "Field delimiter: a single character or 'tab'")
      ->capture_default_str();
  cmd->add_option("--label-map", o.label_map,
                  "Raw label mapping, e.g. '1=FAKE,0=REAL' (default: FAKE/REAL/fake/real)");
}

void add_split_options(CLI::App* cmd, SplitOptions& o, const char* side) {
  cmd->add_option("--test-fraction", o.test_fraction,
                  std::string("Split the dataset and use only its ") + side + " side")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--split-seed", o.seed, "Split seed (default: 42, or --seed for train)");
  cmd->add_flag("--no-stratify", o.no_stratify, "Plain rather than class-stratified split");
}

void add_pipeline_options(CLI::App* cmd, PipelineOptions& o) {
  cmd->add_flag("--no-lowercase", o.no_lowercase, "Keep token case");
  auto* none = cmd->add_flag("--no-stopwords", o.no_stopwords, "Disable stop word removal");
  auto* id = cmd->add_option("--stopwords", o.stopwords, "Built-in stop word list id")
                 ->capture_default_str();
  auto* file = cmd->add_option("--stopwords-file", o.stopwords_file,
                               "Newline-delimited stop word file (embedded in the bundle)");
  none->excludes(id)->excludes(file);
  id->excludes(file);
  cmd->add_flag("--no-stem", o.no_stem, "Disable Porter stemming");
  cmd->add_option("--min-token-length", o.min_token_length, "Drop shorter tokens")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_feature_options(CLI::App* cmd, FeatureOptions& o) {
  cmd->add_option("--min-df", o.min_df, "Minimum document frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-features", o.max_features, "Keep only the most frequent terms")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--weighting", o.weighting, "Feature weighting")
      ->check(CLI::IsMember({"tfidf", "counts"}))
      ->capture_default_str();
  cmd->add_flag("--no-l2", o.no_l2, "Skip L2 normalization of feature vectors");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
}

DatasetSchema schema_of(const DatasetOptions& o) {
  DatasetSchema s;
  s.id_column = o.id_col;
  s.title_column = o.title_col;
  s.body_column = o.text_col;
  s.label_column = o.label_col;
  if (o.delimiter == "tab" || o.delimiter == "\\t") {
    s.delimiter = '\t';
  } else if (o.delimiter.size() == 1) {
    s.delimiter = o.delimiter.front();
  } else {
    throw ConfigError("delimiter must be a single character or 'tab'");
  }
  return s;
}

Corpus load(const DatasetOptions& o) {
  const auto label_map = o.label_map.empty() ? default_label_map() : parse_label_map(o.label_map);
  return load_dataset(o.path, schema_of(o), label_map);
}

enum class Side { Train, Test };

Corpus load(const DatasetOptions& o, const SplitOptions& split_options, Side side,
            std::uint64_t default_seed = 42) {
  Corpus corpus = load(o);
  if (!split_options.test_fraction) return corpus;
  SplitSpec spec;
  spec.test_fraction = *split_options.test_fraction;
  spec.seed = split_options.seed.value_or(default_seed);
  spec.stratified = !split_options.no_stratify;
  auto parts = split(corpus, spec);
  return side == Side::Train ? std::move(parts.train) : std::move(parts.test);
}

PipelineConfig pipeline_of(const PipelineOptions& o) {
  PipelineConfig p;
  p.lowercase = !o.no_lowercase;
  p.stopwords_enabled = !o.no_stopwords;
  p.stemming_enabled = !o.no_stem;
  p.min_token_length = o.min_token_length;
  if (!o.stopwords_file.empty()) {
    const auto list = StopwordList::from_file(o.stopwords_file,
                                              "file:" + fs::path(o.stopwords_file).filename().string());
    p.stopword_list_id = list.id();
    p.custom_stopwords = list.words();
    if (p.custom_stopwords.empty()) throw ConfigError("stop word file is empty");
  } else {
    p.stopword_list_id = o.stopwords;
  }
  p.validate();
  return p;
}

FeatureConfig features_of(const FeatureOptions& o) {
  FeatureConfig f;
  f.min_df = o.min_df;
  f.max_features = o.max_features;
  f.weighting = *parse_weighting(o.weighting);
  f.l2_normalize = !o.no_l2;
  return f;
}

Format format_of(const std::string& s) { return *parse_format(s); }

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes to --out when given, otherwise to `out`.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw DataError("cannot write '" + path + "'");
  write(file);
}

int run_stats(const StatsOptions& o, std::ostream& out) {
  const Corpus corpus = load(o.data);
  write_distribution(out, format_of(o.format), corpus, class_distribution(corpus));
  return kSuccess;
}

int run_train(const TrainOptions& o, std::ostream& out) {
  TrainingOptions options;
  const auto kind = parse_classifier_kind(o.model);
  if (!kind) throw ConfigError("unknown model '" + o.model + "'");
  options.kind = *kind;
  options.pipeline = pipeline_of(o.pipeline);
  options.features = features_of(o.features);
  options.train.epochs = o.epochs;
  options.train.seed = o.seed;
  options.train.shuffle_each_epoch = !o.no_shuffle;
  options.train.aggressiveness = o.aggressiveness;
  options.train.lambda = o.lambda;
  options.train.eta0 = o.eta0;
  options.nb_alpha = o.alpha;
  options.created_at = o.timestamp.empty() ? utc_now() : o.timestamp;

  const Corpus corpus = load(o.data, o.split, Side::Train, o.seed);
  const ModelBundle bundle = train_bundle(corpus, options);
  save_bundle(bundle, o.out);
  const auto h = class_distribution(corpus);
  out << "trained " << display_name(bundle.kind()) << " on " << corpus.size() << " articles (FAKE "
      << h.fake << ", REAL " << h.real << "), " << bundle.vocabulary.size() << " terms -> "
      << o.out << '\n';
  return kSuccess;
}

int run_evaluate(const EvaluateOptions& o, std::ostream& out, std::ostream& err) {
  const ModelBundle bundle = load_bundle(o.bundle);
  const Corpus test = load(o.data, o.split, Side::Test);

  Evaluation evaluation;
  if (o.vectors_cache.empty()) {
    evaluation = evaluate(bundle, test);
  } else if (fs::exists(o.vectors_cache)) {
    evaluation = evaluate(bundle, test, load_vector_cache(o.vectors_cache, bundle.feature_fingerprint()));
  } else {
    const auto cache = build_vector_cache(bundle, test);
    save_vector_cache(cache, o.vectors_cache);
    evaluation = evaluate(bundle, test, cache);
  }

  emit(o.out, out, [&](std::ostream& s) { write_metrics(s, format_of(o.format), evaluation); });
  if (!o.predictions_out.empty()) {
    emit(o.predictions_out, out, [&](std::ostream& s) {
      for (std::size_t i = 0; i < test.size(); ++i) {
        s << to_string(evaluation.predictions[i].label) << ' ' << to_string(*test[i].label) << '\n';
      }
    });
  }
  if (o.enforce_baseline && !evaluation.baseline_passed) {
    err << "error: accuracy " << evaluation.report.accuracy << " is below the "
        << kBaselineAccuracy << " baseline\n";
    return kBaselineFailure;
  }
  return kSuccess;
}

int run_predict(const PredictOptions& o, std::istream& in, std::ostream& out) {
  const ModelBundle bundle = load_bundle(o.bundle);

  std::vector<std::pair<std::string, std::string>> inputs;  // (id, text)
  if (o.input_format == "csv") {
    DatasetOptions data = o.data;
    data.path = o.input.empty() ? std::string{} : o.input;
    const auto label_map = data.label_map.empty() ? default_label_map() : parse_label_map(data.label_map);
    const Corpus corpus = o.input.empty()
                              ? read_dataset(in, schema_of(data), label_map, "stdin")
                              : load_dataset(o.input, schema_of(data), label_map);
    for (const auto& a : corpus) inputs.emplace_back(a.id, a.text());
  } else {
    std::ifstream file;
    if (!o.input.empty()) {
      file.open(o.input);
      if (!file) throw DataError("cannot open input '" + o.input + "'");
    }
    std::istream& src = o.input.empty() ? in : file;
    std::string line;
    std::size_t n = 0;
    while (std::getline(src, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      inputs.emplace_back("line-" + std::to_string(n), line);
    }
  }
  if (inputs.empty()) throw ConfigError("no input articles to predict (empty input)");

  const Predictor predictor(bundle);
  std::vector<PredictionRecord> records;
  records.reserve(inputs.size());
  for (const auto& [id, text] : inputs) records.push_back({id, predictor(text)});
  write_predictions(out, format_of(o.format), records, o.diagnostics);
  return kSuccess;
}

int run_compare(const CompareOptions& o, std::ostream& out) {
  std::vector<ModelBundle> bundles;
  std::vector<std::string> names;
  std::set<std::string> kinds;
  for (const auto& path : o.bundles) {
    bundles.push_back(load_bundle(path));
    kinds.insert(std::string(to_string(bundles.back().kind())));
  }
  const bool unique_kinds = kinds.size() == bundles.size();
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    names.push_back(unique_kinds ? std::string(to_string(bundles[i].kind()))
                                 : fs::path(o.bundles[i]).stem().string());
  }
  const Corpus test = load(o.data, o.split, Side::Test);
  const auto comparison = compare(bundles, test, names);
  emit(o.out, out, [&](std::ostream& s) { write_comparison(s, format_of(o.format), comparison); });
  return kSuccess;
}

int run_top_terms(const TopTermsOptions& o, std::ostream& out) {
  const Corpus corpus = load(o.data);
  const Preprocessor preprocessor(pipeline_of(o.pipeline));
  std::vector<TokenSequence> docs;
  docs.reserve(corpus.size());
  for (const auto& a : corpus) docs.push_back(preprocessor(a.text()));
  const auto features = features_of(o.features);
  const auto vocab = build_vocabulary(docs, features.min_df, features.max_features);
  const auto matrix = vectorize_counts(docs, vocab);
  const auto global = top_terms(matrix, vocab, o.k);
  std::map<Label, std::vector<TermCount>> per_class;
  if (o.per_class) per_class = top_terms_by_class(matrix, vocab, corpus.labels(), o.k);
  write_top_terms(out, format_of(o.format), global, per_class);
  return kSuccess;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Classify news articles as FAKE or REAL", "fakenews"};
  app.set_config("--config", "", "TOML/INI config file; command-line flags take precedence");
  app.set_version_flag("--version", FAKENEWS_VERSION);
  app.require_subcommand(1, 1);

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Class distribution of a dataset");
  add_dataset_options(stats_cmd, stats.data);
  add_format_option(stats_cmd, stats.format);

  TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "Train a model bundle");
  add_dataset_options(train_cmd, train.data);
  add_split_options(train_cmd, train.split, "train");
  add_pipeline_options(train_cmd, train.pipeline);
  add_feature_options(train_cmd, train.features);
  train_cmd->add_option("--model", train.model, "Classifier")
      ->check(CLI::IsMember({"nb", "svm", "pa", "lr"}))
      ->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Training seed")->capture_default_str();
  train_cmd->add_option("--epochs", train.epochs, "Passes over the data")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--C", train.aggressiveness, "PA aggressiveness")->capture_default_str();
  train_cmd->add_option("--lambda", train.lambda, "SVM regularization")->capture_default_str();
  train_cmd->add_option("--eta0", train.eta0, "LR initial learning rate")->capture_default_str();
  train_cmd->add_option("--alpha", train.alpha, "Naive Bayes smoothing")->capture_default_str();
  train_cmd->add_flag("--no-shuffle", train.no_shuffle, "Reuse one shuffled order for every epoch");
  train_cmd->add_option("--timestamp", train.timestamp,
                        "Value for the bundle's created_at field (default: now, UTC)");
  train_cmd->add_option("--out", train.out, "Bundle path")->required();

  EvaluateOptions evaluate_opts;
  auto* eval_cmd = app.add_subcommand("evaluate", "Accuracy, precision and recall on a labeled dataset");
  eval_cmd->add_option("--bundle", evaluate_opts.bundle, "Model bundle")->required();
  add_dataset_options(eval_cmd, evaluate_opts.data);
  add_split_options(eval_cmd, evaluate_opts.split, "test");
  add_format_option(eval_cmd, evaluate_opts.format);
  eval_cmd->add_option("--out", evaluate_opts.out, "Write the report here instead of stdout");
  eval_cmd->add_flag("--enforce-baseline", evaluate_opts.enforce_baseline,
                     "Exit with status 3 when accuracy is below 0.50");
  eval_cmd->add_option("--vectors-cache", evaluate_opts.vectors_cache,
                       "Reuse (or create) a feature-vector cache for this dataset");
  eval_cmd->add_option("--predictions-out", evaluate_opts.predictions_out,
                       "Write 'predicted actual' per article");

  PredictOptions predict_opts;
  predict_opts.data.label_col.clear();
  auto* predict_cmd = app.add_subcommand("predict", "Label articles from a file or stdin");
  predict_cmd->add_option("--bundle", predict_opts.bundle, "Model bundle")->required();
  predict_cmd->add_option("--input", predict_opts.input, "Input file (default: stdin)");
  predict_cmd->add_option("--input-format", predict_opts.input_format,
                          "'lines': one article per line; 'csv': dataset schema")
      ->check(CLI::IsMember({"lines", "csv"}))
      ->capture_default_str();
  predict_cmd->add_option("--id-col", predict_opts.data.id_col, "Id column (csv input)");
  predict_cmd->add_option("--title-col", predict_opts.data.title_col, "Title column (csv input)");
  predict_cmd->add_option("--text-col", predict_opts.data.text_col, "Body column (csv input)");
  predict_cmd->add_option("--label-col", predict_opts.data.label_col, "Label column (csv input, ignored)");
  predict_cmd->add_option("--delimiter", predict_opts.data.delimiter, "Field delimiter (csv input)");
  add_format_option(predict_cmd, predict_opts.format);
  predict_cmd->add_flag("--diagnostics", predict_opts.diagnostics,
                        "Include retained tokens and out-of-vocabulary counts");

  CompareOptions compare_opts;
  auto* compare_cmd = app.add_subcommand("compare", "Pairwise accuracy grid over several bundles");
  compare_cmd->add_option("--bundle", compare_opts.bundles, "Model bundles (two or more)")
      ->required()
      ->expected(1, -1);
  add_dataset_options(compare_cmd, compare_opts.data);
  add_split_options(compare_cmd, compare_opts.split, "test");
  add_format_option(compare_cmd, compare_opts.format);
  compare_cmd->add_option("--out", compare_opts.out, "Write the grid here instead of stdout");

  TopTermsOptions top;
  auto* top_cmd = app.add_subcommand("top-terms", "Most frequent terms after preprocessing");
  add_dataset_options(top_cmd, top.data);
  add_pipeline_options(top_cmd, top.pipeline);
  add_feature_options(top_cmd, top.features);
  top_cmd->add_option("-k,--top", top.k, "Number of terms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  top_cmd->add_flag("--per-class", top.per_class, "One ranking per class");
  add_format_option(top_cmd, top.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*stats_cmd) return run_stats(stats, out);
    if (*train_cmd) return run_train(train, out);
    if (*eval_cmd) return run_evaluate(evaluate_opts, out, err);
    if (*predict_cmd) return run_predict(predict_opts, in, out);
    if (*compare_cmd) {
      if (compare_opts.bundles.size() < 2) throw ConfigError("compare needs at least two --bundle");
      return run_compare(compare_opts, out);
    }
    if (*top_cmd) return run_top_terms(top, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace fakenews::cli
