#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fakenews/label.hpp"
#include "fakenews/sparse.hpp"

namespace fakenews {

enum class LinearKind { Svm, PassiveAggressive, Logistic };

std::string_view to_string(LinearKind kind) noexcept;
std::optional<LinearKind> parse_linear_kind(std::string_view text) noexcept;

// Labels are encoded FAKE -> +1, REAL -> -1 (and FAKE -> 1, REAL -> 0 for the
// logistic loss).
struct TrainConfig {
  int epochs = 10;
  std::uint64_t seed = 42;
  bool shuffle_each_epoch = true;
  double aggressiveness = 1.0;  // PA-I C
  double lambda = 1e-4;         // SVM L2 strength
  double eta0 = 0.1;            // LR initial learning rate

  // Throws ConfigError.
  void validate() const;
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  LinearKind kind = LinearKind::PassiveAggressive;
  TrainConfig config;

  std::size_t dimension() const noexcept { return weights.size(); }
  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

struct PaStep {
  double loss = 0.0;  // hinge loss before the update
  double tau = 0.0;   // step size; 0 when passive
};

// One PA-I step with the bias treated as a constant feature of value 1:
//   loss = max(0, 1 - y (w.x + b)),  tau = min(C, loss / (|x|^2 + 1)),
//   w += tau y x,  b += tau y.
// Leaves w and bias untouched when loss == 0.
PaStep pa_update(std::span<double> weights, double& bias, const SparseVector& x, int y,
                 double aggressiveness);

double sigmoid(double z) noexcept;

// Negative log-likelihood of the logistic model on one example.
double logistic_loss(std::span<const double> weights, double bias, const SparseVector& x,
                     Label y) noexcept;

struct LogisticGradient {
  SparseVector weights;  // nonzero only on the support of x
  double bias = 0.0;
};

// Analytic gradient of logistic_loss: (sigmoid(w.x + b) - y01) * (x, 1).
LogisticGradient logistic_gradient(std::span<const double> weights, double bias,
                                   const SparseVector& x, Label y);

// Sequential online training over seeded-shuffled epochs.
//   PassiveAggressive: pa_update per example.
//   Svm: Pegasos stochastic subgradient on the L2-regularized hinge loss,
//        eta_t = 1 / (lambda t); the bias is a constant feature and shrinks with w.
//   Logistic: SGD on log-loss with eta_t = eta0 / (1 + t / T), T = total steps.
// `initial` warm-starts the weights (its dimension must match). Throws
// ConfigError for a bad config, DataError for single-class or non-finite data.
LinearModel train_linear(LinearKind kind, std::span<const SparseVector> rows,
                         std::size_t num_features, std::span<const Label> labels,
                         const TrainConfig& config,
                         const std::optional<LinearModel>& initial = std::nullopt);

struct LinearPrediction {
  Label label = Label::Fake;
  double margin = 0.0;
  std::optional<double> probability;  // P(FAKE), logistic models only
};

// margin = w.x + b; margin >= 0 predicts FAKE.
LinearPrediction predict_linear(const LinearModel& model, const SparseVector& x);

}  // namespace fakenews
