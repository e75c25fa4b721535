#pragma once

#include <cstdint>
#include <memory>

#include "fastgym/env.hpp"

namespace fastgym {

// Base for decorators that own and delegate to an inner environment.
class Wrapper : public Env {
 public:
  explicit Wrapper(std::unique_ptr<Env> inner);

  const Space& action_space() const noexcept override { return inner_->action_space(); }
  const Space& observation_space() const noexcept override {
    return inner_->observation_space();
  }
  void render(FrameBuffer& fb) const override { inner_->render(fb); }
  using Env::render;
  std::string_view name() const noexcept override { return inner_->name(); }

  Env& inner() noexcept { return *inner_; }
  const Env& inner() const noexcept { return *inner_; }

  // Innermost environment, following any chain of wrappers.
  Env& unwrapped() noexcept;

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override { return inner_->step(action); }

 private:
  std::unique_ptr<Env> inner_;
};

// Ends an episode after max_steps step() calls. When the limit, rather than
// the inner dynamics, ends the episode, the result carries
// info["TimeLimit.truncated"] = true.
class TimeLimit final : public Wrapper {
 public:
  TimeLimit(std::unique_ptr<Env> inner, std::int64_t max_steps);

  std::int64_t max_steps() const noexcept { return max_steps_; }
  std::int64_t elapsed() const noexcept { return elapsed_; }

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override;

 private:
  std::int64_t max_steps_;
  std::int64_t elapsed_ = 0;
};

// Reshapes observations to rank 1, keeping row-major order.
class Flatten final : public Wrapper {
 public:
  explicit Flatten(std::unique_ptr<Env> inner);

  const Space& observation_space() const noexcept override { return observation_space_; }

 protected:
  Observation do_reset(std::optional<std::uint64_t> seed) override;
  StepResult do_step(const Action& action) override;

 private:
  Space observation_space_;
};

Observation flatten(Observation obs);

}  // namespace fastgym
