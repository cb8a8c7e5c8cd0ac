#include "fakenews/classifier.hpp"

namespace fakenews {

std::string_view to_string(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::NaiveBayes: return "nb";
    case ClassifierKind::Svm: return "svm";
    case ClassifierKind::PassiveAggressive: return "pa";
    case ClassifierKind::Logistic: return "lr";
  }
  return "?";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view text) noexcept {
  if (text == "nb") return ClassifierKind::NaiveBayes;
  if (text == "svm") return ClassifierKind::Svm;
  if (text == "pa") return ClassifierKind::PassiveAggressive;
  if (text == "lr") return ClassifierKind::Logistic;
  return std::nullopt;
}

std::string_view display_name(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::NaiveBayes: return "Naive Bayes";
    case ClassifierKind::Svm: return "Support Vector Machine";
    case ClassifierKind::PassiveAggressive: return "Passive Aggressive";
    case ClassifierKind::Logistic: return "Logistic Regression";
  }
  return "?";
}

ClassifierKind kind_of(const Classifier& classifier) noexcept {
  if (std::holds_alternative<NaiveBayesModel>(classifier)) return ClassifierKind::NaiveBayes;
  switch (std::get<LinearModel>(classifier).kind) {
    case LinearKind::Svm: return ClassifierKind::Svm;
    case LinearKind::PassiveAggressive: return ClassifierKind::PassiveAggressive;
    case LinearKind::Logistic: return ClassifierKind::Logistic;
  }
  return ClassifierKind::PassiveAggressive;
}

std::size_t dimension(const Classifier& classifier) noexcept {
  if (const auto* nb = std::get_if<NaiveBayesModel>(&classifier)) return nb->num_terms;
  return std::get<LinearModel>(classifier).dimension();
}

Prediction predict(const Classifier& classifier, const SparseVector& x) {
  if (const auto* nb = std::get_if<NaiveBayesModel>(&classifier)) {
    const auto p = predict_nb(*nb, x);
    const double diff = p.log_score[index_of(Label::Fake)] - p.log_score[index_of(Label::Real)];
    return {p.label, diff, sigmoid(diff)};
  }
  const auto p = predict_linear(std::get<LinearModel>(classifier), x);
  return {p.label, p.margin, p.probability};
}

}  // namespace fakenews
