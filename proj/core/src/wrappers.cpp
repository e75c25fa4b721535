#include "fastgym/wrappers.hpp"

#include <stdexcept>

namespace fastgym {

Wrapper::Wrapper(std::unique_ptr<Env> inner) : inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("Wrapper: inner environment is null");
}

Env& Wrapper::unwrapped() noexcept {
  Env* env = inner_.get();
  while (auto* w = dynamic_cast<Wrapper*>(env)) env = &w->inner();
  return *env;
}

Observation Wrapper::do_reset(std::optional<std::uint64_t> seed) {
  return seed ? inner_->reset(*seed) : inner_->reset();
}

TimeLimit::TimeLimit(std::unique_ptr<Env> inner, std::int64_t max_steps)
    : Wrapper(std::move(inner)), max_steps_(max_steps) {
  if (max_steps < 1) throw std::invalid_argument("TimeLimit: max_steps must be >= 1");
}

Observation TimeLimit::do_reset(std::optional<std::uint64_t> seed) {
  elapsed_ = 0;
  return Wrapper::do_reset(seed);
}

StepResult TimeLimit::do_step(const Action& action) {
  StepResult result = Wrapper::do_step(action);
  ++elapsed_;
  if (elapsed_ >= max_steps_ && !result.terminal) {
    result.terminal = true;
    result.info.set(std::string(kTruncatedKey), true);
  }
  return result;
}

Observation flatten(Observation obs) {
  obs.shape = Shape{obs.data.size()};
  return obs;
}

namespace {

Space flatten_space(const Space& space) {
  if (const auto* box = std::get_if<BoxSpace>(&space)) {
    return BoxSpace(box->low(), box->high());
  }
  return space;
}

}  // namespace

Flatten::Flatten(std::unique_ptr<Env> inner)
    : Wrapper(std::move(inner)), observation_space_(flatten_space(this->inner().observation_space())) {}

Observation Flatten::do_reset(std::optional<std::uint64_t> seed) {
  return flatten(Wrapper::do_reset(seed));
}

StepResult Flatten::do_step(const Action& action) {
  StepResult result = Wrapper::do_step(action);
  result.observation = flatten(std::move(result.observation));
  return result;
}

}  // namespace fastgym
