#include "fastgym/agent/mlp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fastgym {
namespace {

void check_sizes(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2) throw std::invalid_argument("MlpParams: need input and output sizes");
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("MlpParams: layer sizes must be positive");
  }
}

void check_input(const MlpParams& params, std::span<const double> input) {
  if (params.layers.empty()) throw std::invalid_argument("mlp: network has no layers");
  if (input.size() != params.input_dim()) {
    throw std::invalid_argument("mlp: input has " + std::to_string(input.size()) +
                                " values, network expects " +
                                std::to_string(params.input_dim()));
  }
}

// Pre-activations z[l] and activations a[l] (a[0] is the input).
struct Activations {
  std::vector<std::vector<double>> z;
  std::vector<std::vector<double>> a;
};

void affine(const DenseLayer& layer, std::span<const double> x, std::vector<double>& out) {
  out.resize(layer.out);
  for (std::size_t r = 0; r < layer.out; ++r) {
    const double* row = &layer.weights[r * layer.in];
    double acc = layer.bias[r];
    for (std::size_t c = 0; c < layer.in; ++c) acc += row[c] * x[c];
    out[r] = acc;
  }
}

void forward_cached(const MlpParams& params, std::span<const double> input, Activations& act) {
  const std::size_t n = params.layers.size();
  act.z.resize(n);
  act.a.resize(n + 1);
  act.a[0].assign(input.begin(), input.end());
  for (std::size_t l = 0; l < n; ++l) {
    affine(params.layers[l], act.a[l], act.z[l]);
    act.a[l + 1] = act.z[l];
    if (l + 1 < n) {
      for (double& v : act.a[l + 1]) v = elu(v);
    }
  }
}

void check_batch(const MlpParams& params, std::span<const TdSample> batch) {
  if (batch.empty()) throw std::invalid_argument("mlp_gradients: empty batch");
  for (const TdSample& s : batch) {
    check_input(params, s.observation);
    if (s.action < 0 || static_cast<std::size_t>(s.action) >= params.output_dim()) {
      throw std::invalid_argument("mlp_gradients: action " + std::to_string(s.action) +
                                  " outside output range");
    }
  }
}

}  // namespace

MlpParams MlpParams::zeros(std::span<const std::size_t> sizes) {
  check_sizes(sizes);
  MlpParams p;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) p.layers.emplace_back(sizes[i], sizes[i + 1]);
  return p;
}

MlpParams MlpParams::glorot_uniform(std::span<const std::size_t> sizes, Rng& rng) {
  MlpParams p = zeros(sizes);
  for (DenseLayer& layer : p.layers) {
    const double limit = std::sqrt(6.0 / static_cast<double>(layer.in + layer.out));
    for (double& w : layer.weights) w = rng.uniform(-limit, limit);
  }
  return p;
}

std::size_t MlpParams::num_parameters() const noexcept {
  std::size_t n = 0;
  for (const DenseLayer& l : layers) n += l.weights.size() + l.bias.size();
  return n;
}

bool MlpParams::same_shape(const MlpParams& other) const noexcept {
  if (layers.size() != other.layers.size()) return false;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].in != other.layers[i].in || layers[i].out != other.layers[i].out) return false;
  }
  return true;
}

bool MlpParams::all_finite() const noexcept {
  for (const DenseLayer& l : layers) {
    for (double w : l.weights) {
      if (!std::isfinite(w)) return false;
    }
    for (double b : l.bias) {
      if (!std::isfinite(b)) return false;
    }
  }
  return true;
}

double elu_derivative(double x) noexcept { return x > 0.0 ? 1.0 : std::exp(x); }

std::vector<double> mlp_forward(const MlpParams& params, std::span<const double> input) {
  check_input(params, input);
  std::vector<double> current(input.begin(), input.end());
  std::vector<double> next;
  const std::size_t n = params.layers.size();
  for (std::size_t l = 0; l < n; ++l) {
    affine(params.layers[l], current, next);
    if (l + 1 < n) {
      for (double& v : next) v = elu(v);
    }
    current.swap(next);
  }
  return current;
}

double huber_loss(double prediction, double target) noexcept {
  const double e = prediction - target;
  const double abs_e = std::abs(e);
  return abs_e <= 1.0 ? 0.5 * e * e : abs_e - 0.5;
}

double huber_derivative(double prediction, double target) noexcept {
  return std::clamp(prediction - target, -1.0, 1.0);
}

double mlp_loss(const MlpParams& params, std::span<const TdSample> batch) {
  check_batch(params, batch);
  double total = 0.0;
  for (const TdSample& s : batch) {
    const std::vector<double> q = mlp_forward(params, s.observation);
    total += huber_loss(q[static_cast<std::size_t>(s.action)], s.target);
  }
  return total / static_cast<double>(batch.size());
}

LossGradient mlp_gradients(const MlpParams& params, std::span<const TdSample> batch) {
  check_batch(params, batch);
  LossGradient result;
  result.gradient = params;
  for (DenseLayer& l : result.gradient.layers) {
    std::fill(l.weights.begin(), l.weights.end(), 0.0);
    std::fill(l.bias.begin(), l.bias.end(), 0.0);
  }

  const std::size_t n = params.layers.size();
  const double inv_batch = 1.0 / static_cast<double>(batch.size());
  Activations act;
  std::vector<double> delta;
  std::vector<double> upstream;

  for (const TdSample& s : batch) {
    forward_cached(params, s.observation, act);
    const auto action = static_cast<std::size_t>(s.action);
    const double prediction = act.a[n][action];
    result.loss += huber_loss(prediction, s.target) * inv_batch;

    // dLoss/dz for the output layer: nonzero only at the taken action.
    delta.assign(params.layers[n - 1].out, 0.0);
    delta[action] = huber_derivative(prediction, s.target) * inv_batch;

    for (std::size_t l = n; l-- > 0;) {
      const DenseLayer& layer = params.layers[l];
      DenseLayer& grad = result.gradient.layers[l];
      const std::vector<double>& x = act.a[l];
      for (std::size_t r = 0; r < layer.out; ++r) {
        const double d = delta[r];
        if (d == 0.0) continue;
        grad.bias[r] += d;
        double* grow = &grad.weights[r * layer.in];
        for (std::size_t c = 0; c < layer.in; ++c) grow[c] += d * x[c];
      }
      if (l == 0) break;
      upstream.assign(layer.in, 0.0);
      for (std::size_t r = 0; r < layer.out; ++r) {
        const double d = delta[r];
        if (d == 0.0) continue;
        const double* row = &layer.weights[r * layer.in];
        for (std::size_t c = 0; c < layer.in; ++c) upstream[c] += row[c] * d;
      }
      const std::vector<double>& z_prev = act.z[l - 1];
      for (std::size_t c = 0; c < layer.in; ++c) upstream[c] *= elu_derivative(z_prev[c]);
      delta.swap(upstream);
    }
  }
  return result;
}

}  // namespace fastgym
