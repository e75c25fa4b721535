#pragma once

#include <cstdint>

#include "fastgym/env.hpp"
#include "fastgym/envs/states.hpp"

namespace fastgym {

namespace pendulum {
inline constexpr double kMaxSpeed = 8.0;
inline constexpr double kMaxTorque = 2.0;
inline constexpr double kDt = 0.05;
inline constexpr double kGravity = 10.0;
inline constexpr double kMass = 1.0;
inline constexpr double kLength = 1.0;
}  // namespace pendulum

struct PendulumTransition {
  PendulumState next;
  double reward = 0.0;
};

// Semi-implicit Euler step. The torque is clamped to +/-kMaxTorque and the
// reward is computed from the pre-update angle and velocity.
PendulumTransition pendulum_advance(const PendulumState& s, double torque) noexcept;
Observation pendulum_observation(const PendulumState& s);
PendulumState pendulum_initial(Rng& rng);

// Mechanical energy of the rod (I = m l^2 / 3, centre of mass at l / 2).
double pendulum_energy(const PendulumState& s) noexcept;

// Never terminates on its own; episodes end through TimeLimit.
class PendulumEnv final : public Env {
 public:
  explicit PendulumEnv(std::uint64_t seed = 0);

  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }
  void render(FrameBuffer& fb) const override;
  using Env::render;
  std::string_view name() const noexcept override { return "Pendulum"; }

  const PendulumState& state() const noexcept { return state_; }
  void set_state(const PendulumState& s) noexcept { state_ = s; }

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override;

 private:
  Rng rng_;
  PendulumState state_;
  Space action_space_;
  Space observation_space_;
};

}  // namespace fastgym
