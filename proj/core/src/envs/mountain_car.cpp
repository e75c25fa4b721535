#include "fastgym/envs/mountain_car.hpp"

#include <algorithm>
#include <cmath>

#include "fastgym/render/scenes.hpp"

namespace fastgym {

using namespace mountain_car;

MountainCarState mountain_car_advance(const MountainCarState& s, std::int64_t action) noexcept {
  double velocity = s.velocity + static_cast<double>(action - 1) * kForce -
                    kGravity * std::cos(3.0 * s.position);
  velocity = std::clamp(velocity, -kMaxSpeed, kMaxSpeed);
  double position = std::clamp(s.position + velocity, kMinPosition, kMaxPosition);
  if (position == kMinPosition && velocity < 0.0) velocity = 0.0;
  return {position, velocity};
}

bool mountain_car_terminal(const MountainCarState& s) noexcept {
  return s.position >= kGoalPosition;
}

Observation mountain_car_observation(const MountainCarState& s) {
  return Observation({s.position, s.velocity}, Shape{2});
}

MountainCarState mountain_car_initial(Rng& rng) {
  return {rng.uniform(-0.6, -0.4), 0.0};
}

double mountain_car_height(double position) noexcept {
  return std::sin(3.0 * position) * 0.45 + 0.55;
}

MountainCarEnv::MountainCarEnv(std::uint64_t seed)
    : rng_(seed),
      action_space_(DiscreteSpace(3)),
      observation_space_(BoxSpace({kMinPosition, -kMaxSpeed}, {kMaxPosition, kMaxSpeed})) {}

Observation MountainCarEnv::do_reset(std::optional<std::uint64_t> seed) {
  if (seed) rng_.reseed(*seed);
  state_ = mountain_car_initial(rng_);
  return mountain_car_observation(state_);
}

StepResult MountainCarEnv::do_step(const Action& action) {
  const std::int64_t a =
      discrete_action(action, std::get<DiscreteSpace>(action_space_), name());
  state_ = mountain_car_advance(state_, a);
  StepResult result;
  result.observation = mountain_car_observation(state_);
  result.reward = -1.0;
  result.terminal = mountain_car_terminal(state_);
  return result;
}

void MountainCarEnv::render(FrameBuffer& fb) const { render_scene(EnvState{state_}, fb); }

}  // namespace fastgym
