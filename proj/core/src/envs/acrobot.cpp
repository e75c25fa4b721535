#include "fastgym/envs/acrobot.hpp"

#include <algorithm>
#include <cmath>

#include "fastgym/render/scenes.hpp"

namespace fastgym {

using namespace acrobot;
using std::numbers::pi;

std::array<double, 4> acrobot_derivatives(const std::array<double, 4>& s,
                                          double torque) noexcept {
  constexpr double m1 = kLinkMass1;
  constexpr double m2 = kLinkMass2;
  constexpr double l1 = kLinkLength1;
  constexpr double lc1 = kLinkCom1;
  constexpr double lc2 = kLinkCom2;
  constexpr double i1 = kLinkMoi;
  constexpr double i2 = kLinkMoi;
  constexpr double g = kGravity;

  const double theta1 = s[0];
  const double theta2 = s[1];
  const double dtheta1 = s[2];
  const double dtheta2 = s[3];

  const double d1 = m1 * lc1 * lc1 +
                    m2 * (l1 * l1 + lc2 * lc2 + 2.0 * l1 * lc2 * std::cos(theta2)) + i1 + i2;
  const double d2 = m2 * (lc2 * lc2 + l1 * lc2 * std::cos(theta2)) + i2;
  const double phi2 = m2 * lc2 * g * std::sin(theta1 + theta2);
  const double phi1 = -m2 * l1 * lc2 * dtheta2 * dtheta2 * std::sin(theta2) -
                      2.0 * m2 * l1 * lc2 * dtheta2 * dtheta1 * std::sin(theta2) +
                      (m1 * lc1 + m2 * l1) * g * std::sin(theta1) + phi2;
  const double ddtheta2 =
      (torque + d2 / d1 * phi1 - m2 * l1 * lc2 * dtheta1 * dtheta1 * std::sin(theta2) - phi2) /
      (m2 * lc2 * lc2 + i2 - d2 * d2 / d1);
  const double ddtheta1 = -(d2 * ddtheta2 + phi1) / d1;
  return {dtheta1, dtheta2, ddtheta1, ddtheta2};
}

double wrap_angle(double x) noexcept {
  constexpr double span = 2.0 * pi;
  while (x > pi) x -= span;
  while (x < -pi) x += span;
  return x;
}

AcrobotState acrobot_advance(const AcrobotState& s, std::int64_t action) noexcept {
  const double torque = static_cast<double>(action - 1);
  const std::array<double, 4> y0{s.theta1, s.theta2, s.dtheta1, s.dtheta2};

  auto offset = [](const std::array<double, 4>& y, const std::array<double, 4>& k,
                   double h) {
    return std::array<double, 4>{y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2],
                                 y[3] + h * k[3]};
  };
  const auto k1 = acrobot_derivatives(y0, torque);
  const auto k2 = acrobot_derivatives(offset(y0, k1, kDt / 2.0), torque);
  const auto k3 = acrobot_derivatives(offset(y0, k2, kDt / 2.0), torque);
  const auto k4 = acrobot_derivatives(offset(y0, k3, kDt), torque);

  std::array<double, 4> y;
  for (int i = 0; i < 4; ++i) {
    y[i] = y0[i] + kDt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return {wrap_angle(y[0]), wrap_angle(y[1]), std::clamp(y[2], -kMaxVel1, kMaxVel1),
          std::clamp(y[3], -kMaxVel2, kMaxVel2)};
}

bool acrobot_terminal(const AcrobotState& s) noexcept {
  return -std::cos(s.theta1) - std::cos(s.theta2 + s.theta1) > 1.0;
}

Observation acrobot_observation(const AcrobotState& s) {
  return Observation({std::cos(s.theta1), std::sin(s.theta1), std::cos(s.theta2),
                      std::sin(s.theta2), s.dtheta1, s.dtheta2},
                     Shape{6});
}

AcrobotState acrobot_initial(Rng& rng) {
  AcrobotState s;
  s.theta1 = rng.uniform(-0.1, 0.1);
  s.theta2 = rng.uniform(-0.1, 0.1);
  s.dtheta1 = rng.uniform(-0.1, 0.1);
  s.dtheta2 = rng.uniform(-0.1, 0.1);
  return s;
}

AcrobotEnv::AcrobotEnv(std::uint64_t seed)
    : rng_(seed),
      action_space_(DiscreteSpace(3)),
      observation_space_(BoxSpace({-1.0, -1.0, -1.0, -1.0, -kMaxVel1, -kMaxVel2},
                                  {1.0, 1.0, 1.0, 1.0, kMaxVel1, kMaxVel2})) {}

Observation AcrobotEnv::do_reset(std::optional<std::uint64_t> seed) {
  if (seed) rng_.reseed(*seed);
  state_ = acrobot_initial(rng_);
  return acrobot_observation(state_);
}

StepResult AcrobotEnv::do_step(const Action& action) {
  const std::int64_t a =
      discrete_action(action, std::get<DiscreteSpace>(action_space_), name());
  state_ = acrobot_advance(state_, a);
  StepResult result;
  result.observation = acrobot_observation(state_);
  result.reward = -1.0;
  result.terminal = acrobot_terminal(state_);
  return result;
}

void AcrobotEnv::render(FrameBuffer& fb) const { render_scene(EnvState{state_}, fb); }

}  // namespace fastgym
