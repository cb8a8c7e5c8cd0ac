#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "fakenews/linear.hpp"
#include "fakenews/naive_bayes.hpp"

namespace fakenews {

enum class ClassifierKind { NaiveBayes, Svm, PassiveAggressive, Logistic };

// "nb", "svm", "pa", "lr"
std::string_view to_string(ClassifierKind kind) noexcept;
std::optional<ClassifierKind> parse_classifier_kind(std::string_view text) noexcept;
std::string_view display_name(ClassifierKind kind) noexcept;

using Classifier = std::variant<NaiveBayesModel, LinearModel>;

ClassifierKind kind_of(const Classifier& classifier) noexcept;
std::size_t dimension(const Classifier& classifier) noexcept;

struct Prediction {
  Label label = Label::Fake;
  // Signed decision value, positive towards FAKE: the margin for linear
  // models, log P(FAKE|x) - log P(REAL|x) for naive Bayes.
  double score = 0.0;
  std::optional<double> probability;  // P(FAKE); naive Bayes and logistic only
};

Prediction predict(const Classifier& classifier, const SparseVector& x);

}  // namespace fakenews
