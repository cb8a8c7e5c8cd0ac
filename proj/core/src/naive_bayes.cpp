#include "fakenews/naive_bayes.hpp"

#include <cmath>

#include "fakenews/error.hpp"

namespace fakenews {

NaiveBayesModel train_nb(std::span<const SparseVector> rows, std::size_t num_terms,
                         std::span<const Label> labels, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be positive");
  if (rows.size() != labels.size()) throw DataError("row and label counts differ");
  if (num_terms == 0) throw DataError("cannot train on zero features");

  std::array<std::size_t, 2> docs{};
  std::array<std::vector<double>, 2> mass{std::vector<double>(num_terms, 0.0),
                                          std::vector<double>(num_terms, 0.0)};
  std::array<double, 2> total{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto c = index_of(labels[i]);
    ++docs[c];
    for (const auto& e : rows[i]) {
      if (e.index >= num_terms) throw DataError("feature index exceeds the model dimension");
      if (!(e.value >= 0.0) || !std::isfinite(e.value)) {
        throw DataError("naive Bayes needs finite non-negative features");
      }
      mass[c][e.index] += e.value;
      total[c] += e.value;
    }
  }
  if (docs[0] == 0 || docs[1] == 0) {
    throw DataError("naive Bayes training needs both FAKE and REAL examples");
  }

  NaiveBayesModel model;
  model.alpha = alpha;
  model.num_terms = num_terms;
  const auto m = static_cast<double>(rows.size());
  const auto n = static_cast<double>(num_terms);
  for (std::size_t c = 0; c < 2; ++c) {
    model.log_prior[c] = std::log(static_cast<double>(docs[c]) / m);
    const double log_denominator = std::log(total[c] + alpha * n);
    auto& ll = model.log_likelihood[c];
    ll.resize(num_terms);
    for (std::size_t t = 0; t < num_terms; ++t) ll[t] = std::log(mass[c][t] + alpha) - log_denominator;
  }
  return model;
}

NaiveBayesPrediction predict_nb(const NaiveBayesModel& model, const SparseVector& x) {
  if (x.min_dimension() > model.num_terms) {
    throw DataError("input vector exceeds the naive Bayes model dimension");
  }
  NaiveBayesPrediction p;
  for (std::size_t c = 0; c < 2; ++c) p.log_score[c] = model.log_prior[c] + x.dot(model.log_likelihood[c]);
  p.label = p.log_score[index_of(Label::Fake)] >= p.log_score[index_of(Label::Real)] ? Label::Fake
                                                                                     : Label::Real;
  return p;
}

}  // namespace fakenews
