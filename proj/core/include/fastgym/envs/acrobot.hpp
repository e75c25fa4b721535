#pragma once

#include <array>
#include <cstdint>
#include <numbers>

#include "fastgym/env.hpp"
#include "fastgym/envs/states.hpp"

namespace fastgym {

namespace acrobot {
inline constexpr double kDt = 0.2;
inline constexpr double kLinkLength1 = 1.0;
inline constexpr double kLinkLength2 = 1.0;
inline constexpr double kLinkMass1 = 1.0;
inline constexpr double kLinkMass2 = 1.0;
inline constexpr double kLinkCom1 = 0.5;
inline constexpr double kLinkCom2 = 0.5;
inline constexpr double kLinkMoi = 1.0;
inline constexpr double kGravity = 9.8;
inline constexpr double kMaxVel1 = 4.0 * std::numbers::pi;
inline constexpr double kMaxVel2 = 9.0 * std::numbers::pi;
}  // namespace acrobot

// Time derivative (dtheta1, dtheta2, ddtheta1, ddtheta2) of the two-link
// underactuated pendulum with torque applied at the second joint.
std::array<double, 4> acrobot_derivatives(const std::array<double, 4>& s, double torque) noexcept;

// One RK4 step of kDt with torque action-1, then angle wrap and velocity clamp.
AcrobotState acrobot_advance(const AcrobotState& s, std::int64_t action) noexcept;
bool acrobot_terminal(const AcrobotState& s) noexcept;
Observation acrobot_observation(const AcrobotState& s);
AcrobotState acrobot_initial(Rng& rng);

// Wraps into [-pi, pi].
double wrap_angle(double x) noexcept;

class AcrobotEnv final : public Env {
 public:
  explicit AcrobotEnv(std::uint64_t seed = 0);

  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }
  void render(FrameBuffer& fb) const override;
  using Env::render;
  std::string_view name() const noexcept override { return "Acrobot"; }

  const AcrobotState& state() const noexcept { return state_; }
  void set_state(const AcrobotState& s) noexcept { state_ = s; }

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override;

 private:
  Rng rng_;
  AcrobotState state_;
  Space action_space_;
  Space observation_space_;
};

}  // namespace fastgym
