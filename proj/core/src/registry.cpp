#include "fastgym/registry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fastgym/envs/acrobot.hpp"
#include "fastgym/envs/cartpole.hpp"
#include "fastgym/envs/mountain_car.hpp"
#include "fastgym/envs/pendulum.hpp"
#include "fastgym/wrappers.hpp"

namespace fastgym {
namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                        std::tolower(static_cast<unsigned char>(b[j - 1]));
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string_view family_of(std::string_view id) { return id.substr(0, id.find("-v")); }

}  // namespace

bool valid_env_id(std::string_view id) noexcept {
  const std::size_t dash = id.rfind("-v");
  if (dash == std::string_view::npos || dash == 0 || dash + 2 >= id.size()) return false;
  for (std::size_t i = 0; i < dash; ++i) {
    if (!std::isalnum(static_cast<unsigned char>(id[i]))) return false;
  }
  for (std::size_t i = dash + 2; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

void Registry::add(EnvSpec spec) {
  if (!valid_env_id(spec.id)) {
    throw std::invalid_argument("Registry: malformed id '" + spec.id +
                                "' (expected Name-vN)");
  }
  if (!spec.factory) {
    throw std::invalid_argument("Registry: '" + spec.id + "' has no factory");
  }
  if (spec.max_episode_steps && *spec.max_episode_steps < 1) {
    throw std::invalid_argument("Registry: '" + spec.id + "' max_episode_steps must be >= 1");
  }
  if (specs_.contains(spec.id)) {
    throw std::invalid_argument("Registry: duplicate id '" + spec.id + "'");
  }
  std::string key = spec.id;
  specs_.emplace(std::move(key), std::move(spec));
}

bool Registry::contains(std::string_view id) const { return specs_.find(id) != specs_.end(); }

const EnvSpec& Registry::spec(std::string_view id) const {
  const auto it = specs_.find(id);
  if (it != specs_.end()) return it->second;

  std::string message = "unknown environment id '" + std::string(id) + "'";
  std::vector<std::string> near;
  for (const auto& [known, unused] : specs_) {
    if (edit_distance(known, id) <= 3 ||
        edit_distance(family_of(known), family_of(id)) <= 2) {
      near.push_back(known);
    }
  }
  if (!near.empty()) {
    message += "; did you mean ";
    for (std::size_t i = 0; i < near.size(); ++i) {
      message += (i ? ", '" : "'") + near[i] + "'";
    }
    message += "?";
  }
  throw UnknownEnvError(message);
}

std::unique_ptr<Env> Registry::make(std::string_view id) const {
  const EnvSpec& s = spec(id);
  std::unique_ptr<Env> env = s.factory();
  if (!env) throw std::runtime_error("Registry: factory for '" + s.id + "' returned null");
  if (s.max_episode_steps) {
    env = std::make_unique<TimeLimit>(std::move(env), *s.max_episode_steps);
  }
  return env;
}

std::vector<std::string> Registry::list() const {
  std::vector<std::string> ids;
  ids.reserve(specs_.size());
  for (const auto& [id, unused] : specs_) ids.push_back(id);
  return ids;
}

Registry Registry::with_defaults() {
  Registry r;
  r.add({"CartPole-v0", [] { return std::make_unique<CartPoleEnv>(); }, 200});
  r.add({"CartPole-v1", [] { return std::make_unique<CartPoleEnv>(); }, 500});
  r.add({"MountainCar-v0", [] { return std::make_unique<MountainCarEnv>(); }, 200});
  r.add({"Acrobot-v1", [] { return std::make_unique<AcrobotEnv>(); }, 500});
  r.add({"Pendulum-v1", [] { return std::make_unique<PendulumEnv>(); }, 200});
  return r;
}

const Registry& default_registry() {
  static const Registry registry = Registry::with_defaults();
  return registry;
}

std::unique_ptr<Env> make(std::string_view id) { return default_registry().make(id); }

}  // namespace fastgym
