#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "fakenews/bundle.hpp"
#include "fakenews/features.hpp"
#include "fakenews/linear.hpp"
#include "fakenews/porter.hpp"
#include "fakenews/preprocess.hpp"
#include "fakenews/random.hpp"

namespace {

using namespace fakenews;

const std::vector<std::string>& words() {
  static const std::vector<std::string> w = {
      "president", "running",  "caresses", "generalizations", "election", "reported",
      "officials", "sensational", "the",   "and",            "hopeful",  "conspiracy",
      "healthcare", "exposed",  "court",   "relational",     "secretly", "2016",
      "democrats", "investigation", "claims", "allegedly",   "breaking", "news"};
  return w;
}

std::string article(std::mt19937_64& rng, std::size_t length) {
  std::string text;
  for (std::size_t i = 0; i < length; ++i) {
    text += words()[uniform_below(rng, words().size())];
    text += uniform_below(rng, 8) == 0 ? ". " : " ";
  }
  return text;
}

void BM_PorterStem(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& w : words()) benchmark::DoNotOptimize(porter_stem(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words().size()));
}
BENCHMARK(BM_PorterStem);

void BM_Tokenize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto text = article(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Tokenize)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Preprocess(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto text = article(rng, static_cast<std::size_t>(state.range(0)));
  const Preprocessor pre{PipelineConfig{}};
  for (auto _ : state) benchmark::DoNotOptimize(pre(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Preprocess)->Arg(1000);

Corpus synthetic(std::size_t n) {
  std::mt19937_64 rng(3);
  std::vector<Article> articles;
  for (std::size_t i = 0; i < n; ++i) {
    const Label label = i % 2 ? Label::Fake : Label::Real;
    std::string body = article(rng, 200);
    body += label == Label::Fake ? " shocking hoax" : " senate budget";
    articles.push_back({std::to_string(i), "", body, label});
  }
  return Corpus(std::move(articles), "bench");
}

void BM_Vectorize(benchmark::State& state) {
  const auto corpus = synthetic(static_cast<std::size_t>(state.range(0)));
  std::vector<TokenSequence> docs;
  for (const auto& a : corpus) docs.push_back(preprocess(a.text(), PipelineConfig{}));
  for (auto _ : state) {
    const auto vocab = build_vocabulary(docs);
    const auto m = vectorize_counts(docs, vocab);
    const auto idf = fit_idf(m, vocab);
    for (std::size_t d = 0; d < m.rows.size(); ++d) {
      benchmark::DoNotOptimize(l2_normalize(tfidf_transform(m.rows[d], m.doc_lengths[d], idf)));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Vectorize)->Arg(1000);

void BM_TrainLinear(benchmark::State& state) {
  const auto kind = static_cast<LinearKind>(state.range(0));
  const auto corpus = synthetic(2000);
  TrainingOptions o;
  o.kind = ClassifierKind::NaiveBayes;
  const auto bundle = train_bundle(corpus, o);
  const Featurizer featurize(bundle);
  std::vector<SparseVector> rows;
  for (const auto& a : corpus) rows.push_back(featurize(a.text()).features);
  const auto labels = corpus.labels();
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_linear(kind, rows, bundle.vocabulary.size(), labels, TrainConfig{}));
  }
  state.SetLabel(std::string(to_string(kind)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rows.size()) * 10);
}
BENCHMARK(BM_TrainLinear)
    ->Arg(static_cast<int>(LinearKind::PassiveAggressive))
    ->Arg(static_cast<int>(LinearKind::Svm))
    ->Arg(static_cast<int>(LinearKind::Logistic))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
