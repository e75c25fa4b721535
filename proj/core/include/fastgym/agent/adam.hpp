#pragma once

#include <cstdint>
#include <span>

#include "fastgym/agent/mlp.hpp"

namespace fastgym {

struct AdamConfig {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// First/second moment estimates shaped like the parameters, plus step count.
struct AdamState {
  MlpParams m;
  MlpParams v;
  std::int64_t t = 0;

  static AdamState for_params(const MlpParams& params);
};

// One bias-corrected Adam update over a flat parameter block, for step
// number t (1-based, already incremented by the caller).
void adam_update(std::span<double> params, std::span<const double> grads, std::span<double> m,
                 std::span<double> v, std::int64_t t, const AdamConfig& config) noexcept;

// Increments state.t and updates every tensor. Throws std::invalid_argument
// on shape mismatch.
void adam_step(MlpParams& params, const MlpParams& grads, AdamState& state,
               const AdamConfig& config);

}  // namespace fastgym
