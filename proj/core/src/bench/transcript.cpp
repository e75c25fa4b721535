#include "fastgym/bench/transcript.hpp"

#include <charconv>
#include <stdexcept>

#include "fastgym/rng.hpp"

namespace fastgym {

std::string shortest_repr(double value) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, r.ptr};
}

std::string transcript_line(std::int64_t step, const Action& action, const StepResult& result) {
  std::string line = std::to_string(step);
  if (const auto* a = std::get_if<std::int64_t>(&action)) {
    line += ',';
    line += std::to_string(*a);
  } else {
    for (double v : std::get<std::vector<double>>(action)) {
      line += ',';
      line += shortest_repr(v);
    }
  }
  for (double v : result.observation.data) {
    line += ',';
    line += shortest_repr(v);
  }
  line += ',';
  line += shortest_repr(result.reward);
  line += result.terminal ? ",1" : ",0";
  return line;
}

std::int64_t write_transcript(Env& env, std::uint64_t seed, std::int64_t steps, std::ostream& out) {
  if (steps < 0) throw std::invalid_argument("write_transcript: steps must be >= 0");
  Rng action_rng = Rng(seed).jumped();
  const Space& space = env.action_space();
  std::int64_t episodes = 0;
  env.reset(seed);
  for (std::int64_t i = 0; i < steps; ++i) {
    const Action action = sample(space, action_rng);
    const StepResult r = env.step(action);
    out << transcript_line(i, action, r) << '\n';
    if (r.terminal) {
      ++episodes;
      env.reset();
    }
  }
  return episodes;
}

std::int64_t write_transcript(const std::string& env_id, std::uint64_t seed, std::int64_t steps,
                              std::ostream& out, const Registry& registry) {
  std::unique_ptr<Env> env = registry.make(env_id);
  return write_transcript(*env, seed, steps, out);
}

}  // namespace fastgym
