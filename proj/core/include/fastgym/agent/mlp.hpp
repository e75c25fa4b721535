#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fastgym/rng.hpp"

namespace fastgym {

// Fully connected layer; weights are out x in, row-major.
struct DenseLayer {
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  DenseLayer() = default;
  DenseLayer(std::size_t in_dim, std::size_t out_dim)
      : in(in_dim), out(out_dim), weights(in_dim * out_dim, 0.0), bias(out_dim, 0.0) {}

  double& w(std::size_t row, std::size_t col) noexcept { return weights[row * in + col]; }
  double w(std::size_t row, std::size_t col) const noexcept { return weights[row * in + col]; }

  friend bool operator==(const DenseLayer&, const DenseLayer&) = default;
};

// Multi-layer perceptron: ELU on every hidden layer, linear output.
// Also used to hold gradients and optimizer moments of the same shape.
struct MlpParams {
  std::vector<DenseLayer> layers;

  // sizes = {input, hidden..., output}; all parameters zero.
  static MlpParams zeros(std::span<const std::size_t> sizes);
  // Weights uniform in +/-sqrt(6 / (fan_in + fan_out)), biases zero.
  static MlpParams glorot_uniform(std::span<const std::size_t> sizes, Rng& rng);

  std::size_t input_dim() const noexcept { return layers.empty() ? 0 : layers.front().in; }
  std::size_t output_dim() const noexcept { return layers.empty() ? 0 : layers.back().out; }
  std::size_t num_parameters() const noexcept;
  bool same_shape(const MlpParams& other) const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const MlpParams&, const MlpParams&) = default;
};

// alpha = 1.
inline double elu(double x) noexcept { return x > 0.0 ? x : std::expm1(x); }
double elu_derivative(double x) noexcept;

// Throws std::invalid_argument when input.size() != input_dim().
std::vector<double> mlp_forward(const MlpParams& params, std::span<const double> input);

// 0.5 e^2 for |e| <= 1, |e| - 0.5 otherwise; e = prediction - target.
double huber_loss(double prediction, double target) noexcept;
// d huber / d prediction.
double huber_derivative(double prediction, double target) noexcept;

// One regression sample: only q[action] is pulled towards target.
struct TdSample {
  std::span<const double> observation;
  std::int64_t action = 0;
  double target = 0.0;
};

struct LossGradient {
  MlpParams gradient;
  double loss = 0.0;  // mean Huber loss over the batch
};

// Gradient of the mean Huber loss over the batch with respect to every
// parameter. Throws std::invalid_argument on an empty batch, a dimension
// mismatch, or an action outside the output range.
LossGradient mlp_gradients(const MlpParams& params, std::span<const TdSample> batch);

// Mean Huber loss only (for finite-difference checks).
double mlp_loss(const MlpParams& params, std::span<const TdSample> batch);

}  // namespace fastgym
