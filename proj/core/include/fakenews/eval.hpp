#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fakenews/bundle.hpp"
#include "fakenews/classifier.hpp"
#include "fakenews/corpus.hpp"
#include "fakenews/label.hpp"

namespace fakenews {

inline constexpr double kBaselineAccuracy = 0.50;

// FAKE is the positive class.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// Throws ConfigError on a length mismatch or empty input.
ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> actual);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // actual members of the class
};

struct MetricsReport {
  std::string classifier;
  std::string dataset;
  ConfusionMatrix counts;
  double accuracy = 0.0;
  double precision = 0.0;  // FAKE-positive
  double recall = 0.0;     // FAKE-positive
  double f1 = 0.0;
  ClassMetrics fake;
  ClassMetrics real;
  // Machine-readable notes, e.g. "precision_undefined" when tp + fp == 0
  // (the metric is then reported as 0).
  std::vector<std::string> warnings;
};

// Zero denominators give 0 plus a warning. Throws ConfigError if the matrix is empty.
MetricsReport metrics(const ConfusionMatrix& cm, std::string classifier = {},
                      std::string dataset = {});

struct Evaluation {
  MetricsReport report;
  std::vector<Prediction> predictions;  // one per test article, in corpus order
  bool baseline_passed = false;         // accuracy >= kBaselineAccuracy
};

bool passes_baseline(const MetricsReport& report) noexcept;

// Predicts every test article with the bundle's own pipeline, then scores.
Evaluation evaluate(const ModelBundle& bundle, const Corpus& test, std::string name = {});
// Same, from feature vectors precomputed under this bundle's feature pipeline.
Evaluation evaluate(const ModelBundle& bundle, const Corpus& test, const VectorCache& vectors,
                    std::string name = {});

struct PairwiseComparison {
  std::string first;
  std::string second;
  double first_accuracy = 0.0;
  double second_accuracy = 0.0;
  double delta = 0.0;  // first_accuracy - second_accuracy
};

struct Comparison {
  std::vector<MetricsReport> reports;
  std::vector<PairwiseComparison> pairs;  // all unordered pairs, (i, j) with i < j
};

// names default to each bundle's classifier kind. Throws ConfigError with fewer than 2 bundles.
Comparison compare(std::span<const ModelBundle> bundles, const Corpus& test,
                   std::span<const std::string> names = {});

}  // namespace fakenews
