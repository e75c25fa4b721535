#include "fastgym/env.hpp"

#include <cmath>
#include <stdexcept>

namespace fastgym {

Observation Env::begin_episode(std::optional<std::uint64_t> seed) {
  Observation obs = do_reset(seed);
  episode_steps_ = 0;
  done_ = false;
  needs_reset_ = false;
  return obs;
}

Observation Env::reset() { return begin_episode(std::nullopt); }

Observation Env::reset(std::uint64_t seed) { return begin_episode(seed); }

StepResult Env::step(const Action& action) {
  if (needs_reset_) {
    throw ContractError(std::string(name()) + ": step() called before reset()");
  }
  if (done_) {
    throw ContractError(std::string(name()) +
                        ": step() called after a terminal transition; call reset()");
  }
  StepResult result = do_step(action);
  ++episode_steps_;
  done_ = result.terminal;
  return result;
}

FrameBuffer Env::render() const {
  FrameBuffer fb(kDefaultRenderWidth, kDefaultRenderHeight);
  render(fb);
  return fb;
}

std::int64_t discrete_action(const Action& action, const DiscreteSpace& space,
                             std::string_view env_name) {
  const auto* a = std::get_if<std::int64_t>(&action);
  if (a == nullptr) {
    throw std::invalid_argument(std::string(env_name) +
                                ": expected a discrete action index");
  }
  if (!space.contains(*a)) {
    throw std::invalid_argument(std::string(env_name) + ": action " +
                                std::to_string(*a) + " outside [0, " +
                                std::to_string(space.n()) + ")");
  }
  return *a;
}

double scalar_action(const Action& action, std::string_view env_name) {
  double value = 0.0;
  if (const auto* v = std::get_if<std::vector<double>>(&action)) {
    if (v->size() != 1) {
      throw std::invalid_argument(std::string(env_name) +
                                  ": expected a 1-element continuous action");
    }
    value = v->front();
  } else {
    value = static_cast<double>(std::get<std::int64_t>(action));
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(env_name) + ": action must be finite");
  }
  return value;
}

}  // namespace fastgym
