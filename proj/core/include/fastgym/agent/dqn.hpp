#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include "fastgym/agent/adam.hpp"
#include "fastgym/agent/mlp.hpp"
#include "fastgym/agent/replay_buffer.hpp"
#include "fastgym/env.hpp"
#include "fastgym/rng.hpp"

namespace fastgym {

enum class ObservationMode {
  kState,   // the environment's state vector
  kPixels,  // 84x84 grayscale downsample of the rendered frame
};

// DQN hyperparameters. Network activation (ELU), loss (Huber, delta 1) and
// optimizer (Adam) are fixed.
struct TrainConfig {
  double discount = 0.99;
  std::vector<std::size_t> hidden_units{32, 32};
  std::size_t batch_size = 32;
  double learning_rate = 3e-4;
  std::int64_t target_update_freq = 150;
  std::size_t memory_size = 50000;
  double epsilon_start = 1.0;
  double epsilon_final = 0.01;
  // Epsilon decays linearly over this fraction of the run.
  double epsilon_anneal_fraction = 0.1;
  // One gradient step per environment step once the buffer holds this many.
  std::size_t learning_starts = 1000;
  ObservationMode observation = ObservationMode::kState;

  // Throws std::invalid_argument when a value is out of range.
  void validate() const;
};

struct EpsilonSchedule {
  double start = 1.0;
  double final = 0.01;
  std::int64_t anneal_steps = 1;
};

// Linear from start (step 0) to final (step >= anneal_steps).
double epsilon_at(std::int64_t step, const EpsilonSchedule& schedule) noexcept;

// Index of the largest value; ties go to the lowest index.
std::int64_t argmax(std::span<const double> values) noexcept;

// Epsilon-greedy. Consumes one draw to decide exploration and, when exploring,
// one more for the action.
std::int64_t select_action(const MlpParams& params, std::span<const double> observation,
                           double epsilon, Rng& rng);

// r + (done ? 0 : discount * max_a' target(s', a')).
double td_target(const MlpParams& target, const Transition& t, double discount);

// Samples batch_size transitions, regresses online Q towards td_target with
// one Adam step, and returns the pre-update mean Huber loss. Throws
// std::invalid_argument when the buffer holds fewer than batch_size entries.
double train_step(MlpParams& online, const MlpParams& target, const ReplayBuffer& buffer,
                  AdamState& optimizer, const TrainConfig& config, Rng& rng);

inline void target_sync(const MlpParams& online, MlpParams& target) { target = online; }

struct EpisodeRecord {
  std::int64_t episode = 0;
  std::int64_t steps = 0;  // transitions in this episode
  double episode_return = 0.0;
  double epsilon = 0.0;  // at the episode's last step
  double wall_time_ms = 0.0;  // since training started
};

struct TrainResult {
  std::vector<EpisodeRecord> history;
  MlpParams online;
  std::int64_t train_steps = 0;
  std::int64_t target_syncs = 0;
};

using EpisodeCallback = std::function<void(const EpisodeRecord&)>;

// Full DQN loop on an environment with a discrete action space: act, store,
// train, and sync the target network every target_update_freq environment
// steps. Only completed episodes are recorded.
TrainResult train_dqn(const TrainConfig& config, Env& env, std::int64_t total_steps, Rng& rng,
                      const EpisodeCallback& on_episode = {});

// train_dqn restricted to CartPole (checked by name).
TrainResult train_cartpole(const TrainConfig& config, Env& env, std::int64_t total_steps,
                           Rng& rng, const EpisodeCallback& on_episode = {});

// Mean return of the last `window` episodes (or all, if fewer).
double trailing_mean_return(std::span<const EpisodeRecord> history, std::size_t window);

// Largest trailing-window mean reached at any point of the history, over
// windows of exactly `window` episodes; 0 when there are fewer episodes.
double best_trailing_mean_return(std::span<const EpisodeRecord> history, std::size_t window);

// CSV with header "episode,steps,return,epsilon,wall_time_ms".
void write_training_csv_header(std::ostream& out);
void write_training_csv_row(std::ostream& out, const EpisodeRecord& record);

}  // namespace fastgym
