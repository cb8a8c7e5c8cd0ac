#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fakenews/classifier.hpp"
#include "fakenews/corpus.hpp"
#include "fakenews/features.hpp"
#include "fakenews/preprocess.hpp"

namespace fakenews {

inline constexpr int kBundleFormatVersion = 1;

struct Provenance {
  std::string dataset;
  std::uint64_t seed = 0;
  std::string created_at;  // free-form; set explicitly for reproducible files

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Everything prediction needs: pipeline config, vocabulary, optional IDF
// weights and the trained classifier.
struct ModelBundle {
  int format_version = kBundleFormatVersion;
  PipelineConfig pipeline;
  FeatureConfig features;
  Vocabulary vocabulary;
  std::optional<TfidfModel> tfidf;
  Classifier classifier;
  Provenance provenance;

  ClassifierKind kind() const noexcept { return kind_of(classifier); }
  // Throws DataError when dimensions disagree or IDF weights are missing/unexpected.
  void validate() const;
  // Hex digest of everything that determines feature vectors (pipeline,
  // feature config, vocabulary, IDF), but not the classifier.
  std::string feature_fingerprint() const;

  friend bool operator==(const ModelBundle&, const ModelBundle&) = default;
};

struct TrainingOptions {
  ClassifierKind kind = ClassifierKind::PassiveAggressive;
  PipelineConfig pipeline;
  FeatureConfig features;
  TrainConfig train;
  double nb_alpha = 1.0;
  std::string created_at;
};

// preprocess -> vocabulary -> counts -> (TF-IDF) -> (L2) -> classifier.
ModelBundle train_bundle(const Corpus& corpus, const TrainingOptions& options);

struct FeaturizedText {
  SparseVector features;
  std::vector<std::string> retained_tokens;  // in-vocabulary tokens, in order
  std::size_t oov_count = 0;
};

// Applies a bundle's pipeline and feature transform to raw text.
class Featurizer {
 public:
  explicit Featurizer(const ModelBundle& bundle);

  FeaturizedText operator()(std::string_view text) const;
  // Count vector and pre-pruning length to a feature vector.
  SparseVector transform(const SparseVector& counts, std::size_t doc_length) const;

 private:
  const ModelBundle& bundle_;
  Preprocessor preprocessor_;
};

struct TextPrediction {
  Label label = Label::Fake;
  double score = 0.0;
  std::optional<double> probability;
  std::vector<std::string> retained_tokens;
  std::size_t oov_count = 0;
  // No in-vocabulary tokens survived; the decision comes from the prior/bias.
  bool fallback = false;
};

class Predictor {
 public:
  explicit Predictor(const ModelBundle& bundle);
  TextPrediction operator()(std::string_view text) const;

 private:
  const ModelBundle& bundle_;
  Featurizer featurizer_;
};

TextPrediction predict_text(const ModelBundle& bundle, std::string_view text);

// Self-describing JSON document with format_version and a CRC-32 over the payload.
std::string serialize_bundle(const ModelBundle& bundle);
// Throws DataError on malformed JSON, unknown format_version, checksum
// mismatch or inconsistent dimensions.
ModelBundle parse_bundle(std::string_view text);

// Writes to a temporary file in the target directory, then renames it into place.
void save_bundle(const ModelBundle& bundle, const std::filesystem::path& path);
ModelBundle load_bundle(const std::filesystem::path& path);

// Feature vectors computed for a corpus under one bundle's feature pipeline.
struct VectorCache {
  std::string fingerprint;
  std::vector<std::string> ids;
  std::vector<SparseVector> rows;
};

VectorCache build_vector_cache(const ModelBundle& bundle, const Corpus& corpus);
void save_vector_cache(const VectorCache& cache, const std::filesystem::path& path);
// Throws DataError if the cache was produced under a different feature pipeline.
VectorCache load_vector_cache(const std::filesystem::path& path,
                              std::string_view expected_fingerprint);

}  // namespace fakenews
