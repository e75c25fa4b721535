#include "fastgym/envs/cartpole.hpp"

#include <cmath>
#include <limits>

#include "fastgym/render/scenes.hpp"

namespace fastgym {

using namespace cartpole;

CartPoleState cartpole_advance(const CartPoleState& s, std::int64_t action) noexcept {
  constexpr double kTotalMass = kCartMass + kPoleMass;
  constexpr double kPoleMassLength = kPoleMass * kHalfLength;

  const double force = action == 1 ? kForce : -kForce;
  const double cos_theta = std::cos(s.theta);
  const double sin_theta = std::sin(s.theta);

  const double temp =
      (force + kPoleMassLength * s.theta_dot * s.theta_dot * sin_theta) / kTotalMass;
  const double theta_acc =
      (kGravity * sin_theta - cos_theta * temp) /
      (kHalfLength * (4.0 / 3.0 - kPoleMass * cos_theta * cos_theta / kTotalMass));
  const double x_acc = temp - kPoleMassLength * theta_acc * cos_theta / kTotalMass;

  return {
      s.x + kTau * s.x_dot,
      s.x_dot + kTau * x_acc,
      s.theta + kTau * s.theta_dot,
      s.theta_dot + kTau * theta_acc,
  };
}

bool cartpole_terminal(const CartPoleState& s) noexcept {
  return s.x < -kXThreshold || s.x > kXThreshold || s.theta < -kThetaThreshold ||
         s.theta > kThetaThreshold;
}

Observation cartpole_observation(const CartPoleState& s) {
  return Observation({s.x, s.x_dot, s.theta, s.theta_dot}, Shape{4});
}

CartPoleState cartpole_initial(Rng& rng) {
  CartPoleState s;
  s.x = rng.uniform(-0.05, 0.05);
  s.x_dot = rng.uniform(-0.05, 0.05);
  s.theta = rng.uniform(-0.05, 0.05);
  s.theta_dot = rng.uniform(-0.05, 0.05);
  return s;
}

CartPoleEnv::CartPoleEnv(std::uint64_t seed)
    : rng_(seed),
      action_space_(DiscreteSpace(2)),
      observation_space_(BoxSpace(
          {-2 * kXThreshold, -std::numeric_limits<double>::infinity(),
           -2 * kThetaThreshold, -std::numeric_limits<double>::infinity()},
          {2 * kXThreshold, std::numeric_limits<double>::infinity(),
           2 * kThetaThreshold, std::numeric_limits<double>::infinity()})) {}

Observation CartPoleEnv::do_reset(std::optional<std::uint64_t> seed) {
  if (seed) rng_.reseed(*seed);
  state_ = cartpole_initial(rng_);
  return cartpole_observation(state_);
}

StepResult CartPoleEnv::do_step(const Action& action) {
  const std::int64_t a =
      discrete_action(action, std::get<DiscreteSpace>(action_space_), name());
  state_ = cartpole_advance(state_, a);
  StepResult result;
  result.observation = cartpole_observation(state_);
  result.reward = 1.0;
  result.terminal = cartpole_terminal(state_);
  return result;
}

void CartPoleEnv::render(FrameBuffer& fb) const { render_scene(EnvState{state_}, fb); }

}  // namespace fastgym
