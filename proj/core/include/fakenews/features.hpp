#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fakenews/label.hpp"
#include "fakenews/preprocess.hpp"
#include "fakenews/sparse.hpp"

namespace fakenews {

// Term -> column mapping learned at fit time. Columns are assigned in
// lexicographic term order, so the mapping does not depend on document order.
class Vocabulary {
 public:
  Vocabulary() = default;
  // terms must be strictly ascending; every df in [1, num_documents].
  // Throws DataError otherwise.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> document_frequency,
             std::size_t num_documents);

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t num_documents() const noexcept { return num_documents_; }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<std::size_t>& document_frequency() const noexcept { return df_; }
  const std::string& term(std::size_t index) const { return terms_.at(index); }
  std::optional<std::size_t> index_of(std::string_view term) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.terms_ == b.terms_ && a.df_ == b.df_ && a.num_documents_ == b.num_documents_;
  }

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::size_t num_documents_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

// Sparse m x n count matrix. doc_lengths holds each document's token count
// after preprocessing but before vocabulary pruning.
struct DocTermMatrix {
  std::vector<SparseVector> rows;
  std::size_t num_terms = 0;
  std::vector<std::size_t> doc_lengths;

  std::size_t num_documents() const noexcept { return rows.size(); }
};

struct TfidfModel {
  std::vector<double> idf;
  std::size_t num_documents = 0;

  std::size_t dimension() const noexcept { return idf.size(); }
  friend bool operator==(const TfidfModel&, const TfidfModel&) = default;
};

// Drops terms with df < min_df; with max_features keeps the most frequent
// terms by total count (ties: lexicographically smaller term wins).
// Throws DataError("empty vocabulary") when nothing survives.
Vocabulary build_vocabulary(const std::vector<TokenSequence>& docs, std::size_t min_df = 2,
                            std::optional<std::size_t> max_features = std::nullopt);

SparseVector count_vectorize(const TokenSequence& seq, const Vocabulary& vocab);

DocTermMatrix vectorize_counts(const std::vector<TokenSequence>& docs, const Vocabulary& vocab);

// idf[t] = 1 + ln(N / df[t]), natural log, using the vocabulary's fit statistics.
// Throws DataError if the matrix was not built against this vocabulary.
TfidfModel fit_idf(const DocTermMatrix& matrix, const Vocabulary& vocab);

// value_t = (count_t / doc_length) * idf[t]. No normalization.
// Throws ConfigError on doc_length == 0 with nonempty counts, or a dimension mismatch.
SparseVector tfidf_transform(const SparseVector& counts, std::size_t doc_length,
                             const TfidfModel& model);

// Unit Euclidean norm; the zero vector is returned unchanged.
SparseVector l2_normalize(const SparseVector& v);

struct TermCount {
  std::string term;
  std::size_t count = 0;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

// Highest total counts first; ties broken lexicographically.
std::vector<TermCount> top_terms(const DocTermMatrix& matrix, const Vocabulary& vocab,
                                 std::size_t k);
// One ranking per class.
std::map<Label, std::vector<TermCount>> top_terms_by_class(const DocTermMatrix& matrix,
                                                           const Vocabulary& vocab,
                                                           const std::vector<Label>& labels,
                                                           std::size_t k);

enum class Weighting { Counts, Tfidf };

std::string_view to_string(Weighting w) noexcept;
std::optional<Weighting> parse_weighting(std::string_view text) noexcept;

struct FeatureConfig {
  std::size_t min_df = 2;
  std::optional<std::size_t> max_features;
  Weighting weighting = Weighting::Tfidf;
  bool l2_normalize = true;

  void validate() const;
  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

}  // namespace fakenews
