#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fakenews/label.hpp"
#include "fakenews/sparse.hpp"

namespace fakenews {

// Multinomial Naive Bayes. Arrays are indexed by index_of(Label).
struct NaiveBayesModel {
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> log_likelihood;  // log P(term | class), one row per class
  double alpha = 1.0;
  std::size_t num_terms = 0;

  friend bool operator==(const NaiveBayesModel&, const NaiveBayesModel&) = default;
};

struct NaiveBayesPrediction {
  Label label = Label::Fake;
  std::array<double, 2> log_score{};  // log P(c) + sum_t x_t log P(t|c); P(x) omitted
};

// P(c) = docs in c / m; P(t|c) = (mass of t in c + alpha) / (mass in c + alpha * n).
// Features must be non-negative (counts, or TF-IDF weights used as fractional counts).
// Throws ConfigError for alpha <= 0, DataError for single-class data or bad features.
NaiveBayesModel train_nb(std::span<const SparseVector> rows, std::size_t num_terms,
                         std::span<const Label> labels, double alpha = 1.0);

// argmax over log scores, ties go to FAKE.
NaiveBayesPrediction predict_nb(const NaiveBayesModel& model, const SparseVector& x);

}  // namespace fakenews
