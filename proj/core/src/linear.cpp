#include "fakenews/linear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "fakenews/error.hpp"
#include "fakenews/random.hpp"

namespace fakenews {

std::string_view to_string(LinearKind kind) noexcept {
  switch (kind) {
    case LinearKind::Svm: return "svm";
    case LinearKind::PassiveAggressive: return "pa";
    case LinearKind::Logistic: return "lr";
  }
  return "?";
}

std::optional<LinearKind> parse_linear_kind(std::string_view text) noexcept {
  if (text == "svm") return LinearKind::Svm;
  if (text == "pa") return LinearKind::PassiveAggressive;
  if (text == "lr") return LinearKind::Logistic;
  return std::nullopt;
}

void TrainConfig::validate() const {
  if (epochs < 1) throw ConfigError("epochs must be at least 1");
  if (!(aggressiveness > 0.0) || !std::isfinite(aggressiveness)) {
    throw ConfigError("aggressiveness C must be positive");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be positive");
  if (!(eta0 > 0.0) || !std::isfinite(eta0)) throw ConfigError("eta0 must be positive");
}

PaStep pa_update(std::span<double> weights, double& bias, const SparseVector& x, int y,
                 double aggressiveness) {
  if (!(aggressiveness > 0.0)) throw ConfigError("aggressiveness C must be positive");
  PaStep step;
  step.loss = std::max(0.0, 1.0 - y * (x.dot(weights) + bias));
  if (step.loss == 0.0) return step;
  step.tau = std::min(aggressiveness, step.loss / (x.squared_norm() + 1.0));
  x.axpy_into(step.tau * y, weights);
  bias += step.tau * y;
  return step;
}

double sigmoid(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

double softplus(double a) noexcept { return std::max(a, 0.0) + std::log1p(std::exp(-std::abs(a))); }

double as_01(Label y) noexcept { return y == Label::Fake ? 1.0 : 0.0; }

}  // namespace

double logistic_loss(std::span<const double> weights, double bias, const SparseVector& x,
                     Label y) noexcept {
  const double z = x.dot(weights) + bias;
  return y == Label::Fake ? softplus(-z) : softplus(z);
}

LogisticGradient logistic_gradient(std::span<const double> weights, double bias,
                                   const SparseVector& x, Label y) {
  const double residual = sigmoid(x.dot(weights) + bias) - as_01(y);
  std::vector<SparseEntry> g;
  g.reserve(x.nnz());
  for (const auto& e : x) {
    if (const double v = residual * e.value; v != 0.0) g.push_back({e.index, v});
  }
  return {SparseVector(std::move(g)), residual};
}

namespace {

void check_training_data(std::span<const SparseVector> rows, std::size_t num_features,
                         std::span<const Label> labels) {
  if (rows.size() != labels.size()) throw DataError("row and label counts differ");
  if (num_features == 0) throw DataError("cannot train on zero features");
  bool has_fake = false;
  bool has_real = false;
  for (auto l : labels) (l == Label::Fake ? has_fake : has_real) = true;
  if (!has_fake || !has_real) throw DataError("training data must contain both FAKE and REAL");
  for (const auto& row : rows) {
    if (row.min_dimension() > num_features) throw DataError("feature index exceeds the dimension");
    if (!row.all_finite()) throw DataError("non-finite feature value in training data");
  }
}

// w = scale * v, so the Pegasos shrink is O(1) per step.
class ScaledWeights {
 public:
  ScaledWeights(std::vector<double> w, double bias) : v_(std::move(w)), bias_(bias) {}

  double margin(const SparseVector& x) const { return scale_ * (x.dot(v_) + bias_); }

  void shrink(double factor) {
    if (factor <= 0.0) {
      std::fill(v_.begin(), v_.end(), 0.0);
      bias_ = 0.0;
      scale_ = 1.0;
      return;
    }
    scale_ *= factor;
    if (scale_ < 1e-9) fold();
  }

  void add(double step, const SparseVector& x) {
    x.axpy_into(step / scale_, v_);
    bias_ += step / scale_;
  }

  std::pair<std::vector<double>, double> materialize() {
    fold();
    return {std::move(v_), bias_};
  }

 private:
  void fold() {
    for (auto& w : v_) w *= scale_;
    bias_ *= scale_;
    scale_ = 1.0;
  }

  std::vector<double> v_;
  double bias_;
  double scale_ = 1.0;
};

}  // namespace

LinearModel train_linear(LinearKind kind, std::span<const SparseVector> rows,
                         std::size_t num_features, std::span<const Label> labels,
                         const TrainConfig& config, const std::optional<LinearModel>& initial) {
  config.validate();
  check_training_data(rows, num_features, labels);

  LinearModel model;
  model.kind = kind;
  model.config = config;
  if (initial) {
    if (initial->dimension() != num_features) {
      throw DataError("warm-start model dimension does not match the features");
    }
    model.weights = initial->weights;
    model.bias = initial->bias;
  } else {
    model.weights.assign(num_features, 0.0);
  }

  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!config.shuffle_each_epoch) deterministic_shuffle(order, rng);

  const auto epochs = static_cast<std::size_t>(config.epochs);
  const double total_steps = static_cast<double>(epochs * rows.size());
  std::optional<ScaledWeights> svm;
  if (kind == LinearKind::Svm) svm.emplace(std::move(model.weights), model.bias);

  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    if (config.shuffle_each_epoch) deterministic_shuffle(order, rng);
    for (const auto i : order) {
      const auto& x = rows[i];
      const int y = to_sign(labels[i]);
      switch (kind) {
        case LinearKind::PassiveAggressive:
          pa_update(model.weights, model.bias, x, y, config.aggressiveness);
          break;
        case LinearKind::Svm: {
          const double eta = 1.0 / (config.lambda * static_cast<double>(t + 1));
          const bool violated = y * svm->margin(x) < 1.0;
          svm->shrink(1.0 - eta * config.lambda);
          if (violated) svm->add(eta * y, x);
          break;
        }
        case LinearKind::Logistic: {
          const double eta = config.eta0 / (1.0 + static_cast<double>(t) / total_steps);
          const auto grad = logistic_gradient(model.weights, model.bias, x, labels[i]);
          grad.weights.axpy_into(-eta, model.weights);
          model.bias -= eta * grad.bias;
          break;
        }
      }
      ++t;
    }
  }
  if (svm) std::tie(model.weights, model.bias) = svm->materialize();
  return model;
}

LinearPrediction predict_linear(const LinearModel& model, const SparseVector& x) {
  if (x.min_dimension() > model.dimension()) {
    throw DataError("input vector exceeds the linear model dimension");
  }
  LinearPrediction p;
  p.margin = x.dot(model.weights) + model.bias;
  p.label = p.margin >= 0.0 ? Label::Fake : Label::Real;
  if (model.kind == LinearKind::Logistic) p.probability = sigmoid(p.margin);
  return p;
}

}  // namespace fakenews
