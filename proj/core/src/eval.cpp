#include "fakenews/eval.hpp"

#include "fakenews/error.hpp"

namespace fakenews {

ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> actual) {
  if (predicted.size() != actual.size()) {
    throw ConfigError("predicted and actual label counts differ (" +
                      std::to_string(predicted.size()) + " vs " + std::to_string(actual.size()) +
                      ")");
  }
  if (actual.empty()) throw ConfigError("cannot build a confusion matrix from zero labels");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const bool p = predicted[i] == Label::Fake;
    const bool a = actual[i] == Label::Fake;
    if (p && a) {
      ++cm.tp;
    } else if (p) {
      ++cm.fp;
    } else if (a) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

ClassMetrics class_metrics(std::size_t hit, std::size_t false_pos, std::size_t miss) {
  ClassMetrics m;
  m.precision = ratio(hit, hit + false_pos);
  m.recall = ratio(hit, hit + miss);
  m.f1 = harmonic(m.precision, m.recall);
  m.support = hit + miss;
  return m;
}

}  // namespace

MetricsReport metrics(const ConfusionMatrix& cm, std::string classifier, std::string dataset) {
  if (cm.total() == 0) throw ConfigError("metrics need at least one evaluated article");
  MetricsReport r;
  r.classifier = std::move(classifier);
  r.dataset = std::move(dataset);
  r.counts = cm;
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());
  r.fake = class_metrics(cm.tp, cm.fp, cm.fn);
  r.real = class_metrics(cm.tn, cm.fn, cm.fp);
  r.precision = r.fake.precision;
  r.recall = r.fake.recall;
  r.f1 = r.fake.f1;
  if (cm.tp + cm.fp == 0) r.warnings.emplace_back("precision_undefined");
  if (cm.tp + cm.fn == 0) r.warnings.emplace_back("recall_undefined");
  return r;
}

bool passes_baseline(const MetricsReport& report) noexcept {
  return report.accuracy >= kBaselineAccuracy;
}

namespace {

Evaluation score(const ModelBundle& bundle, const Corpus& test, std::vector<Prediction> predictions,
                 std::string name) {
  std::vector<Label> predicted;
  predicted.reserve(predictions.size());
  for (const auto& p : predictions) predicted.push_back(p.label);
  const auto actual = test.labels();
  if (name.empty()) name = std::string(to_string(bundle.kind()));
  Evaluation e;
  e.report = metrics(confusion(predicted, actual), std::move(name), test.source_name());
  e.baseline_passed = passes_baseline(e.report);
  e.predictions = std::move(predictions);
  return e;
}

}  // namespace

Evaluation evaluate(const ModelBundle& bundle, const Corpus& test, std::string name) {
  bundle.validate();
  test.require_labeled();
  const Predictor predictor(bundle);
  std::vector<Prediction> predictions;
  predictions.reserve(test.size());
  for (const auto& article : test) {
    const auto p = predictor(article.text());
    predictions.push_back({p.label, p.score, p.probability});
  }
  return score(bundle, test, std::move(predictions), std::move(name));
}

Evaluation evaluate(const ModelBundle& bundle, const Corpus& test, const VectorCache& vectors,
                    std::string name) {
  bundle.validate();
  test.require_labeled();
  if (vectors.fingerprint != bundle.feature_fingerprint()) {
    throw DataError("vector cache was built under a different feature pipeline");
  }
  if (vectors.ids.size() != test.size()) throw DataError("vector cache does not match the test set");
  std::vector<Prediction> predictions;
  predictions.reserve(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    if (vectors.ids[i] != test[i].id) {
      throw DataError("vector cache row " + std::to_string(i) + " is for article '" +
                      vectors.ids[i] + "', expected '" + test[i].id + "'");
    }
    predictions.push_back(predict(bundle.classifier, vectors.rows[i]));
  }
  return score(bundle, test, std::move(predictions), std::move(name));
}

Comparison compare(std::span<const ModelBundle> bundles, const Corpus& test,
                   std::span<const std::string> names) {
  if (bundles.size() < 2) throw ConfigError("compare needs at least two models");
  if (!names.empty() && names.size() != bundles.size()) {
    throw ConfigError("compare got a different number of names and models");
  }
  Comparison c;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    c.reports.push_back(evaluate(bundles[i], test, names.empty() ? std::string{} : names[i]).report);
  }
  for (std::size_t i = 0; i < c.reports.size(); ++i) {
    for (std::size_t j = i + 1; j < c.reports.size(); ++j) {
      const auto& a = c.reports[i];
      const auto& b = c.reports[j];
      c.pairs.push_back({a.classifier, b.classifier, a.accuracy, b.accuracy, a.accuracy - b.accuracy});
    }
  }
  return c;
}

}  // namespace fakenews
