#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "fastgym/env.hpp"
#include "fastgym/registry.hpp"

namespace fastgym {

// Shortest decimal that parses back to the same double (std::to_chars).
// Integral values print without a fractional part, e.g. "1" and "-0".
std::string shortest_repr(double value);

// "step,action,obs...,reward,terminal" where a continuous action prints each
// component and terminal is 0 or 1 (truncation by a time limit counts).
std::string transcript_line(std::int64_t step, const Action& action, const StepResult& result);

// Scripted rollout: reset(seed), actions drawn from the action space with
// Rng(seed).jumped(), and the unseeded reset() after every terminal step.
// Writes one transcript line per step and returns the number of episodes
// that ended.
std::int64_t write_transcript(Env& env, std::uint64_t seed, std::int64_t steps, std::ostream& out);

std::int64_t write_transcript(const std::string& env_id, std::uint64_t seed, std::int64_t steps,
                              std::ostream& out, const Registry& registry = default_registry());

}  // namespace fastgym
