#pragma once

#include <cstdint>

#include "fastgym/env.hpp"
#include "fastgym/envs/states.hpp"

namespace fastgym {

namespace mountain_car {
inline constexpr double kMinPosition = -1.2;
inline constexpr double kMaxPosition = 0.6;
inline constexpr double kMaxSpeed = 0.07;
inline constexpr double kGoalPosition = 0.5;
inline constexpr double kForce = 0.001;
inline constexpr double kGravity = 0.0025;
}  // namespace mountain_car

// Actions: 0 push left, 1 no push, 2 push right.
MountainCarState mountain_car_advance(const MountainCarState& s, std::int64_t action) noexcept;
bool mountain_car_terminal(const MountainCarState& s) noexcept;
Observation mountain_car_observation(const MountainCarState& s);
MountainCarState mountain_car_initial(Rng& rng);
// Track height at a position, y = 0.45 sin(3x) + 0.55.
double mountain_car_height(double position) noexcept;

class MountainCarEnv final : public Env {
 public:
  explicit MountainCarEnv(std::uint64_t seed = 0);

  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }
  void render(FrameBuffer& fb) const override;
  using Env::render;
  std::string_view name() const noexcept override { return "MountainCar"; }

  const MountainCarState& state() const noexcept { return state_; }
  void set_state(const MountainCarState& s) noexcept { state_ = s; }

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override;

 private:
  Rng rng_;
  MountainCarState state_;
  Space action_space_;
  Space observation_space_;
};

}  // namespace fastgym
