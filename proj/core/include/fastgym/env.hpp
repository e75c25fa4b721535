#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fastgym/render/framebuffer.hpp"
#include "fastgym/spaces.hpp"
#include "fastgym/types.hpp"

namespace fastgym {

// Thrown when the reset/step protocol is violated (step before reset, step
// after a terminal transition).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Environment contract shared by every simulation and wrapper.
//
// reset() must precede the first step(); once a step returns terminal=true,
// further steps throw ContractError until the next reset(). Instances are
// single-owner: safe to move between threads, not to share between them.
class Env {
 public:
  virtual ~Env() = default;

  Env() = default;
  Env(const Env&) = delete;
  Env& operator=(const Env&) = delete;

  // Starts a new episode. The seeded overload reseeds the environment's
  // generator first; the unseeded one continues its current stream.
  Observation reset();
  Observation reset(std::uint64_t seed);

  StepResult step(const Action& action);
  StepResult step(std::int64_t action) { return step(Action{action}); }

  virtual const Space& action_space() const noexcept = 0;
  virtual const Space& observation_space() const noexcept = 0;

  // Draws the current state into fb, resizing it if needed.
  virtual void render(FrameBuffer& fb) const = 0;
  FrameBuffer render() const;

  // Environment family, e.g. "CartPole".
  virtual std::string_view name() const noexcept = 0;

  std::int64_t episode_steps() const noexcept { return episode_steps_; }
  bool done() const noexcept { return done_; }
  bool needs_reset() const noexcept { return needs_reset_; }

 protected:
  virtual Observation do_reset(std::optional<std::uint64_t> seed) = 0;
  virtual StepResult do_step(const Action& action) = 0;

 private:
  Observation begin_episode(std::optional<std::uint64_t> seed);

  std::int64_t episode_steps_ = 0;
  bool done_ = false;
  bool needs_reset_ = true;
};

// Helpers for implementations.
std::int64_t discrete_action(const Action& action, const DiscreteSpace& space,
                             std::string_view env_name);
double scalar_action(const Action& action, std::string_view env_name);

}  // namespace fastgym
