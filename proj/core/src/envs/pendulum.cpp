#include "fastgym/envs/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fastgym/render/scenes.hpp"

namespace fastgym {

using namespace pendulum;

namespace {

// Python-style ((x + pi) mod 2pi) - pi; theta is unbounded for a spinning rod.
double normalize_angle(double x) noexcept {
  constexpr double span = 2.0 * std::numbers::pi;
  double r = std::fmod(x + std::numbers::pi, span);
  if (r < 0.0) r += span;
  return r - std::numbers::pi;
}

}  // namespace

PendulumTransition pendulum_advance(const PendulumState& s, double torque) noexcept {
  const double u = std::clamp(torque, -kMaxTorque, kMaxTorque);
  const double angle = normalize_angle(s.theta);
  const double cost = angle * angle + 0.1 * s.theta_dot * s.theta_dot + 0.001 * u * u;

  double theta_dot =
      s.theta_dot + (3.0 * kGravity / (2.0 * kLength) * std::sin(s.theta) +
                     3.0 / (kMass * kLength * kLength) * u) *
                        kDt;
  theta_dot = std::clamp(theta_dot, -kMaxSpeed, kMaxSpeed);
  const double theta = s.theta + theta_dot * kDt;
  return {{theta, theta_dot}, -cost};
}

Observation pendulum_observation(const PendulumState& s) {
  return Observation({std::cos(s.theta), std::sin(s.theta), s.theta_dot}, Shape{3});
}

PendulumState pendulum_initial(Rng& rng) {
  PendulumState s;
  s.theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
  s.theta_dot = rng.uniform(-1.0, 1.0);
  return s;
}

double pendulum_energy(const PendulumState& s) noexcept {
  const double inertia = kMass * kLength * kLength / 3.0;
  return 0.5 * inertia * s.theta_dot * s.theta_dot +
         kMass * kGravity * (kLength / 2.0) * std::cos(s.theta);
}

PendulumEnv::PendulumEnv(std::uint64_t seed)
    : rng_(seed),
      action_space_(BoxSpace({-kMaxTorque}, {kMaxTorque})),
      observation_space_(BoxSpace({-1.0, -1.0, -kMaxSpeed}, {1.0, 1.0, kMaxSpeed})) {}

Observation PendulumEnv::do_reset(std::optional<std::uint64_t> seed) {
  if (seed) rng_.reseed(*seed);
  state_ = pendulum_initial(rng_);
  return pendulum_observation(state_);
}

StepResult PendulumEnv::do_step(const Action& action) {
  const PendulumTransition t = pendulum_advance(state_, scalar_action(action, name()));
  state_ = t.next;
  StepResult result;
  result.observation = pendulum_observation(state_);
  result.reward = t.reward;
  result.terminal = false;
  return result;
}

void PendulumEnv::render(FrameBuffer& fb) const { render_scene(EnvState{state_}, fb); }

}  // namespace fastgym
