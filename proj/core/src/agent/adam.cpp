#include "fastgym/agent/adam.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fastgym {

AdamState AdamState::for_params(const MlpParams& params) {
  AdamState state;
  state.m = params;
  for (DenseLayer& l : state.m.layers) {
    std::fill(l.weights.begin(), l.weights.end(), 0.0);
    std::fill(l.bias.begin(), l.bias.end(), 0.0);
  }
  state.v = state.m;
  return state;
}

void adam_update(std::span<double> params, std::span<const double> grads, std::span<double> m,
                 std::span<double> v, std::int64_t t, const AdamConfig& config) noexcept {
  const double bias1 = 1.0 - std::pow(config.beta1, static_cast<double>(t));
  const double bias2 = 1.0 - std::pow(config.beta2, static_cast<double>(t));
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * g;
    v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * g * g;
    const double m_hat = m[i] / bias1;
    const double v_hat = v[i] / bias2;
    params[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
}

void adam_step(MlpParams& params, const MlpParams& grads, AdamState& state,
               const AdamConfig& config) {
  if (!params.same_shape(grads) || !params.same_shape(state.m) || !params.same_shape(state.v)) {
    throw std::invalid_argument("adam_step: parameter, gradient and moment shapes differ");
  }
  ++state.t;
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    DenseLayer& p = params.layers[l];
    adam_update(p.weights, grads.layers[l].weights, state.m.layers[l].weights,
                state.v.layers[l].weights, state.t, config);
    adam_update(p.bias, grads.layers[l].bias, state.m.layers[l].bias, state.v.layers[l].bias,
                state.t, config);
  }
}

}  // namespace fastgym
