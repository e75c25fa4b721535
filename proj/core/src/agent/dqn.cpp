#include "fastgym/agent/dqn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fastgym/bench/transcript.hpp"
#include "fastgym/render/scenes.hpp"

namespace fastgym {
namespace {

std::vector<std::size_t> layer_sizes(const TrainConfig& config, std::size_t input_dim,
                                     std::size_t n_actions) {
  std::vector<std::size_t> sizes{input_dim};
  sizes.insert(sizes.end(), config.hidden_units.begin(), config.hidden_units.end());
  sizes.push_back(n_actions);
  return sizes;
}

Observation features(const TrainConfig& config, const Env& env, Observation obs) {
  if (config.observation == ObservationMode::kPixels) {
    return Observation(grayscale_84(env.render()), Shape{84 * 84});
  }
  return obs;
}

}  // namespace

void TrainConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("TrainConfig: " + what);
  };
  if (!(discount >= 0.0 && discount <= 1.0)) fail("discount must be in [0, 1]");
  if (hidden_units.empty()) fail("need at least one hidden layer");
  for (std::size_t h : hidden_units) {
    if (h == 0) fail("hidden layer sizes must be positive");
  }
  if (batch_size == 0) fail("batch_size must be positive");
  if (!(learning_rate > 0.0)) fail("learning_rate must be positive");
  if (target_update_freq < 1) fail("target_update_freq must be positive");
  if (memory_size < batch_size) fail("memory_size must be >= batch_size");
  if (!(epsilon_final >= 0.0 && epsilon_final <= epsilon_start && epsilon_start <= 1.0)) {
    fail("require 0 <= epsilon_final <= epsilon_start <= 1");
  }
  if (!(epsilon_anneal_fraction > 0.0 && epsilon_anneal_fraction <= 1.0)) {
    fail("epsilon_anneal_fraction must be in (0, 1]");
  }
}

double epsilon_at(std::int64_t step, const EpsilonSchedule& schedule) noexcept {
  if (step <= 0) return schedule.start;
  if (schedule.anneal_steps <= 0 || step >= schedule.anneal_steps) return schedule.final;
  const double fraction = static_cast<double>(step) / static_cast<double>(schedule.anneal_steps);
  return schedule.start + (schedule.final - schedule.start) * fraction;
}

std::int64_t argmax(std::span<const double> values) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return static_cast<std::int64_t>(best);
}

std::int64_t select_action(const MlpParams& params, std::span<const double> observation,
                           double epsilon, Rng& rng) {
  const double u = rng.uniform01();
  if (u < epsilon) {
    return static_cast<std::int64_t>(rng.below(params.output_dim()));
  }
  const std::vector<double> q = mlp_forward(params, observation);
  return argmax(q);
}

double td_target(const MlpParams& target, const Transition& t, double discount) {
  if (t.done) return t.reward;
  const std::vector<double> q_next = mlp_forward(target, t.next_state.values());
  return t.reward + discount * *std::max_element(q_next.begin(), q_next.end());
}

double train_step(MlpParams& online, const MlpParams& target, const ReplayBuffer& buffer,
                  AdamState& optimizer, const TrainConfig& config, Rng& rng) {
  if (buffer.size() < config.batch_size) {
    throw std::invalid_argument("train_step: buffer holds " + std::to_string(buffer.size()) +
                                " transitions, batch needs " +
                                std::to_string(config.batch_size));
  }
  const std::vector<std::size_t> indices = buffer.sample_indices(config.batch_size, rng);
  std::vector<TdSample> batch;
  batch.reserve(indices.size());
  for (std::size_t i : indices) {
    const Transition& t = buffer.slot(i);
    batch.push_back({t.state.values(), t.action, td_target(target, t, config.discount)});
  }
  LossGradient lg = mlp_gradients(online, batch);
  adam_step(online, lg.gradient, optimizer, AdamConfig{.learning_rate = config.learning_rate});
  return lg.loss;
}

TrainResult train_dqn(const TrainConfig& config, Env& env, std::int64_t total_steps, Rng& rng,
                      const EpisodeCallback& on_episode) {
  config.validate();
  if (total_steps < 0) throw std::invalid_argument("train_dqn: total_steps must be >= 0");
  const auto* actions = std::get_if<DiscreteSpace>(&env.action_space());
  if (actions == nullptr) {
    throw std::invalid_argument("train_dqn: " + std::string(env.name()) +
                                " does not have a discrete action space");
  }

  TrainResult result;
  if (total_steps == 0) return result;

  const auto start = std::chrono::steady_clock::now();
  Observation obs = features(config, env, env.reset(rng.next()));

  const auto n_actions = static_cast<std::size_t>(actions->n());
  const std::vector<std::size_t> sizes = layer_sizes(config, obs.size(), n_actions);
  result.online = MlpParams::glorot_uniform(sizes, rng);
  MlpParams target = result.online;
  AdamState optimizer = AdamState::for_params(result.online);
  ReplayBuffer buffer(config.memory_size);

  const EpsilonSchedule schedule{
      config.epsilon_start, config.epsilon_final,
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::llround(
                                    config.epsilon_anneal_fraction *
                                    static_cast<double>(total_steps))))};
  const std::size_t warmup = std::max(config.learning_starts, config.batch_size);

  EpisodeRecord episode;
  for (std::int64_t step = 0; step < total_steps; ++step) {
    const double epsilon = epsilon_at(step, schedule);
    const std::int64_t action = select_action(result.online, obs.values(), epsilon, rng);
    StepResult sr = env.step(action);
    Observation next = features(config, env, std::move(sr.observation));

    episode.episode_return += sr.reward;
    ++episode.steps;
    const bool failed = sr.terminal && !sr.truncated();
    buffer.push({obs, action, sr.reward, next, failed});
    obs = std::move(next);

    if (buffer.size() >= warmup) {
      train_step(result.online, target, buffer, optimizer, config, rng);
      ++result.train_steps;
    }
    if ((step + 1) % config.target_update_freq == 0) {
      target_sync(result.online, target);
      ++result.target_syncs;
    }

    if (sr.terminal) {
      episode.epsilon = epsilon;
      episode.wall_time_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
      result.history.push_back(episode);
      if (on_episode) on_episode(episode);
      episode = EpisodeRecord{};
      episode.episode = static_cast<std::int64_t>(result.history.size());
      obs = features(config, env, env.reset());
    }
  }
  return result;
}

TrainResult train_cartpole(const TrainConfig& config, Env& env, std::int64_t total_steps,
                           Rng& rng, const EpisodeCallback& on_episode) {
  if (env.name() != "CartPole") {
    throw std::invalid_argument("train_cartpole: expected a CartPole environment, got " +
                                std::string(env.name()));
  }
  return train_dqn(config, env, total_steps, rng, on_episode);
}

double trailing_mean_return(std::span<const EpisodeRecord> history, std::size_t window) {
  if (history.empty() || window == 0) return 0.0;
  const std::size_t n = std::min(window, history.size());
  double sum = 0.0;
  for (std::size_t i = history.size() - n; i < history.size(); ++i) {
    sum += history[i].episode_return;
  }
  return sum / static_cast<double>(n);
}

double best_trailing_mean_return(std::span<const EpisodeRecord> history, std::size_t window) {
  if (window == 0 || history.size() < window) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < window; ++i) sum += history[i].episode_return;
  double best = sum;
  for (std::size_t i = window; i < history.size(); ++i) {
    sum += history[i].episode_return - history[i - window].episode_return;
    best = std::max(best, sum);
  }
  return best / static_cast<double>(window);
}

void write_training_csv_header(std::ostream& out) {
  out << "episode,steps,return,epsilon,wall_time_ms\n";
}

void write_training_csv_row(std::ostream& out, const EpisodeRecord& r) {
  out << r.episode << ',' << r.steps << ',' << shortest_repr(r.episode_return) << ','
      << shortest_repr(r.epsilon) << ',' << shortest_repr(r.wall_time_ms) << '\n';
}

}  // namespace fastgym
