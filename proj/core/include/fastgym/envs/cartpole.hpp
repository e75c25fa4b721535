#pragma once

#include <cstdint>

#include "fastgym/env.hpp"
#include "fastgym/envs/states.hpp"

namespace fastgym {

namespace cartpole {
inline constexpr double kGravity = 9.8;
inline constexpr double kCartMass = 1.0;
inline constexpr double kPoleMass = 0.1;
inline constexpr double kHalfLength = 0.5;
inline constexpr double kForce = 10.0;
inline constexpr double kTau = 0.02;
inline constexpr double kXThreshold = 2.4;
inline constexpr double kThetaThreshold = 12.0 * 2.0 * 3.14159265358979323846 / 360.0;
}  // namespace cartpole

// One explicit-Euler step. action 0 pushes left, 1 pushes right.
CartPoleState cartpole_advance(const CartPoleState& s, std::int64_t action) noexcept;
bool cartpole_terminal(const CartPoleState& s) noexcept;
Observation cartpole_observation(const CartPoleState& s);
CartPoleState cartpole_initial(Rng& rng);

class CartPoleEnv final : public Env {
 public:
  explicit CartPoleEnv(std::uint64_t seed = 0);

  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }
  void render(FrameBuffer& fb) const override;
  using Env::render;
  std::string_view name() const noexcept override { return "CartPole"; }

  const CartPoleState& state() const noexcept { return state_; }
  void set_state(const CartPoleState& s) noexcept { state_ = s; }

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override;

 private:
  Rng rng_;
  CartPoleState state_;
  Space action_space_;
  Space observation_space_;
};

}  // namespace fastgym
