#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fastgym/env.hpp"

namespace fastgym {

struct EnvSpec {
  // Must match ^[A-Za-z0-9]+-v[0-9]+$.
  std::string id;
  std::function<std::unique_ptr<Env>()> factory;
  // When set, make() wraps the environment in TimeLimit.
  std::optional<std::int64_t> max_episode_steps;
  std::pair<int, int> render_size{kDefaultRenderWidth, kDefaultRenderHeight};
};

class UnknownEnvError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

bool valid_env_id(std::string_view id) noexcept;

// Maps ids to environment specs. Registration happens up front; afterwards
// concurrent make() calls are safe.
class Registry {
 public:
  // Throws std::invalid_argument on a malformed or duplicate id, or a missing factory.
  void add(EnvSpec spec);

  bool contains(std::string_view id) const;
  const EnvSpec& spec(std::string_view id) const;

  // Fresh, independent instance. Throws UnknownEnvError naming the id and
  // any close matches.
  std::unique_ptr<Env> make(std::string_view id) const;

  // Sorted ids.
  std::vector<std::string> list() const;

  // CartPole-v0/v1, MountainCar-v0, Acrobot-v1, Pendulum-v1.
  static Registry with_defaults();

 private:
  std::map<std::string, EnvSpec, std::less<>> specs_;
};

// Process-wide registry holding the defaults; immutable.
const Registry& default_registry();

// make(id) against default_registry().
std::unique_ptr<Env> make(std::string_view id);

}  // namespace fastgym
