#include "fakenews/features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fakenews/error.hpp"

namespace fakenews {

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> document_frequency,
                       std::size_t num_documents)
    : terms_(std::move(terms)), df_(std::move(document_frequency)), num_documents_(num_documents) {
  if (terms_.size() != df_.size()) {
    throw DataError("vocabulary has " + std::to_string(terms_.size()) + " terms but " +
                    std::to_string(df_.size()) + " document frequencies");
  }
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0 && !(terms_[i - 1] < terms_[i])) {
      throw DataError("vocabulary terms are not strictly ascending at '" + terms_[i] + "'");
    }
    if (df_[i] < 1 || df_[i] > num_documents_) {
      throw DataError("document frequency of '" + terms_[i] + "' out of range");
    }
    index_.emplace(terms_[i], i);
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(const std::vector<TokenSequence>& docs, std::size_t min_df,
                            std::optional<std::size_t> max_features) {
  if (docs.empty()) throw DataError("cannot build a vocabulary from zero documents");
  if (min_df < 1) throw ConfigError("min_df must be at least 1");
  if (max_features && *max_features == 0) throw ConfigError("max_features must be at least 1");

  struct Stats {
    std::size_t df = 0;
    std::size_t total = 0;
  };
  std::map<std::string, Stats, std::less<>> stats;
  std::unordered_set<std::string_view> seen_in_doc;
  for (const auto& doc : docs) {
    seen_in_doc.clear();
    for (const auto& token : doc) {
      auto& s = stats[token];
      ++s.total;
      if (seen_in_doc.insert(token).second) ++s.df;
    }
  }

  std::vector<std::pair<std::string, Stats>> kept;
  for (auto& [term, s] : stats) {
    if (s.df >= min_df) kept.emplace_back(term, s);
  }
  if (kept.empty()) throw DataError("empty vocabulary");

  if (max_features && kept.size() > *max_features) {
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
      return a.second.total > b.second.total;  // stable: lexicographic within ties
    });
    kept.resize(*max_features);
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  std::vector<std::string> terms;
  std::vector<std::size_t> df;
  terms.reserve(kept.size());
  df.reserve(kept.size());
  for (auto& [term, s] : kept) {
    terms.push_back(std::move(term));
    df.push_back(s.df);
  }
  return Vocabulary(std::move(terms), std::move(df), docs.size());
}

SparseVector count_vectorize(const TokenSequence& seq, const Vocabulary& vocab) {
  std::map<std::size_t, double> counts;
  for (const auto& token : seq) {
    if (const auto idx = vocab.index_of(token)) counts[*idx] += 1.0;
  }
  std::vector<SparseEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [index, count] : counts) entries.push_back({index, count});
  return SparseVector(std::move(entries));
}

DocTermMatrix vectorize_counts(const std::vector<TokenSequence>& docs, const Vocabulary& vocab) {
  DocTermMatrix m;
  m.num_terms = vocab.size();
  m.rows.reserve(docs.size());
  m.doc_lengths.reserve(docs.size());
  for (const auto& doc : docs) {
    m.rows.push_back(count_vectorize(doc, vocab));
    m.doc_lengths.push_back(doc.size());
  }
  return m;
}

TfidfModel fit_idf(const DocTermMatrix& matrix, const Vocabulary& vocab) {
  if (matrix.num_terms != vocab.size()) {
    throw DataError("count matrix has " + std::to_string(matrix.num_terms) +
                    " columns but the vocabulary has " + std::to_string(vocab.size()) + " terms");
  }
  TfidfModel model;
  model.num_documents = vocab.num_documents();
  model.idf.reserve(vocab.size());
  const auto n = static_cast<double>(vocab.num_documents());
  for (const auto df : vocab.document_frequency()) {
    model.idf.push_back(1.0 + std::log(n / static_cast<double>(df)));
  }
  return model;
}

SparseVector tfidf_transform(const SparseVector& counts, std::size_t doc_length,
                             const TfidfModel& model) {
  if (counts.empty()) return {};
  if (doc_length == 0) throw ConfigError("document length 0 with nonempty counts");
  if (counts.min_dimension() > model.dimension()) {
    throw ConfigError("count vector exceeds the TF-IDF model dimension");
  }
  std::vector<SparseEntry> out;
  out.reserve(counts.nnz());
  const auto length = static_cast<double>(doc_length);
  for (const auto& e : counts) out.push_back({e.index, (e.value / length) * model.idf[e.index]});
  return SparseVector(std::move(out));
}

SparseVector l2_normalize(const SparseVector& v) {
  const double norm = std::sqrt(v.squared_norm());
  if (norm == 0.0) return v;
  std::vector<SparseEntry> out;
  out.reserve(v.nnz());
  for (const auto& e : v) out.push_back({e.index, e.value / norm});
  return SparseVector(std::move(out));
}

namespace {

std::vector<TermCount> rank(const std::vector<std::size_t>& totals, const Vocabulary& vocab,
                            std::size_t k) {
  std::vector<TermCount> ranked;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (totals[i] > 0) ranked.push_back({vocab.term(i), totals[i]});
  }
  // Terms are already in lexicographic order, so a stable sort keeps ties lexicographic.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const TermCount& a, const TermCount& b) { return a.count > b.count; });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

void accumulate(const SparseVector& row, std::vector<std::size_t>& totals) {
  for (const auto& e : row) totals[e.index] += static_cast<std::size_t>(std::llround(e.value));
}

}  // namespace

std::vector<TermCount> top_terms(const DocTermMatrix& matrix, const Vocabulary& vocab,
                                 std::size_t k) {
  if (k < 1) throw ConfigError("k must be at least 1");
  std::vector<std::size_t> totals(vocab.size(), 0);
  for (const auto& row : matrix.rows) accumulate(row, totals);
  return rank(totals, vocab, k);
}

std::map<Label, std::vector<TermCount>> top_terms_by_class(const DocTermMatrix& matrix,
                                                           const Vocabulary& vocab,
                                                           const std::vector<Label>& labels,
                                                           std::size_t k) {
  if (k < 1) throw ConfigError("k must be at least 1");
  if (labels.size() != matrix.rows.size()) {
    throw ConfigError("label count does not match the number of matrix rows");
  }
  std::map<Label, std::vector<std::size_t>> totals;
  for (auto label : kAllLabels) totals[label].assign(vocab.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) accumulate(matrix.rows[i], totals[labels[i]]);
  std::map<Label, std::vector<TermCount>> out;
  for (auto& [label, t] : totals) out[label] = rank(t, vocab, k);
  return out;
}

std::string_view to_string(Weighting w) noexcept {
  return w == Weighting::Counts ? "counts" : "tfidf";
}

std::optional<Weighting> parse_weighting(std::string_view text) noexcept {
  if (text == "counts") return Weighting::Counts;
  if (text == "tfidf") return Weighting::Tfidf;
  return std::nullopt;
}

void FeatureConfig::validate() const {
  if (min_df < 1) throw ConfigError("min_df must be at least 1");
  if (max_features && *max_features == 0) throw ConfigError("max_features must be at least 1");
}

}  // namespace fakenews
