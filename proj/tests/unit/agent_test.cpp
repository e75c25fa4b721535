#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "../support/oracles.hpp"
#include "fastgym/agent/adam.hpp"
#include "fastgym/agent/dqn.hpp"
#include "fastgym/agent/mlp.hpp"
#include "fastgym/agent/replay_buffer.hpp"
#include "fastgym/envs/cartpole.hpp"
#include "fastgym/registry.hpp"

namespace fastgym {
namespace {

MlpParams unit_network() {
  const std::size_t sizes[] = {2, 2, 2, 2};
  MlpParams p = MlpParams::zeros(sizes);
  for (DenseLayer& l : p.layers) std::fill(l.weights.begin(), l.weights.end(), 1.0);
  p.layers.back().bias = {0.0, 0.5};
  return p;
}

Transition make_transition(double reward, bool done, std::vector<double> state = {0.1, -0.2}) {
  return {Observation(state), 0, reward, Observation(std::move(state)), done};
}

TEST(Mlp, ZeroNetworkOutputsZeros) {
  const std::size_t sizes[] = {4, 32, 32, 2};
  const MlpParams p = MlpParams::zeros(sizes);
  const double x[] = {1, 2, 3, 4};
  EXPECT_EQ(mlp_forward(p, x), (std::vector<double>{0, 0}));
  EXPECT_EQ(p.num_parameters(), 4u * 32 + 32 + 32 * 32 + 32 + 32 * 2 + 2);
}

TEST(Mlp, Elu) {
  EXPECT_EQ(elu(0.0), 0.0);
  EXPECT_EQ(elu(1.0), 1.0);
  EXPECT_NEAR(elu(-2.0), -(1.0 - std::exp(-2.0)), 1e-15);
  EXPECT_EQ(elu_derivative(3.0), 1.0);
  EXPECT_NEAR(elu_derivative(-1.0), std::exp(-1.0), 1e-15);
}

TEST(Mlp, TinyNetworkGolden) {
  const MlpParams p = unit_network();
  const double a[] = {1.0, 0.0};
  const std::vector<double> qa = mlp_forward(p, a);
  EXPECT_NEAR(qa[0], 4.0, 1e-12);
  EXPECT_NEAR(qa[1], 4.5, 1e-12);
  const double b[] = {-1.0, 0.0};
  const std::vector<double> qb = mlp_forward(p, b);
  EXPECT_NEAR(qb[0], -1.4350928722989194, 1e-12);
  EXPECT_NEAR(qb[1], -0.9350928722989194, 1e-12);
}

TEST(Mlp, DimensionMismatchThrows) {
  const MlpParams p = unit_network();
  const double x[] = {1.0, 2.0, 3.0};
  EXPECT_THROW(mlp_forward(p, x), std::invalid_argument);
}

TEST(Mlp, GlorotInitIsBoundedAndSeeded) {
  const std::size_t sizes[] = {4, 32, 32, 2};
  Rng a(3);
  Rng b(3);
  const MlpParams p = MlpParams::glorot_uniform(sizes, a);
  EXPECT_EQ(p, MlpParams::glorot_uniform(sizes, b));
  for (const DenseLayer& l : p.layers) {
    const double limit = std::sqrt(6.0 / static_cast<double>(l.in + l.out));
    for (double w : l.weights) {
      EXPECT_LE(std::abs(w), limit);
    }
    for (double v : l.bias) EXPECT_EQ(v, 0.0);
  }
}

TEST(Huber, Branches) {
  EXPECT_EQ(huber_loss(0.5, 0.0), 0.125);
  EXPECT_EQ(huber_loss(2.0, 0.0), 1.5);
  EXPECT_EQ(huber_loss(-2.0, 0.0), 1.5);
  EXPECT_EQ(huber_loss(1.0, 1.0), 0.0);
  EXPECT_EQ(huber_derivative(0.5, 0.0), 0.5);
  EXPECT_EQ(huber_derivative(5.0, 0.0), 1.0);
  EXPECT_EQ(huber_derivative(-5.0, 0.0), -1.0);
}

TEST(Gradients, ZeroErrorGivesZeroGradient) {
  const MlpParams p = unit_network();
  const double x[] = {1.0, 0.0};
  const TdSample batch[] = {{x, 1, 4.5}, {x, 0, 4.0}};
  const LossGradient g = mlp_gradients(p, batch);
  EXPECT_EQ(g.loss, 0.0);
  for (const DenseLayer& l : g.gradient.layers) {
    for (double v : l.weights) EXPECT_EQ(v, 0.0);
    for (double v : l.bias) EXPECT_EQ(v, 0.0);
  }
}

TEST(Gradients, UntakenActionRowsAreZero) {
  Rng rng(6);
  const std::size_t sizes[] = {3, 5, 4};
  const MlpParams p = MlpParams::glorot_uniform(sizes, rng);
  const double x[] = {0.3, -0.7, 1.1};
  const TdSample batch[] = {{x, 2, 5.0}};
  const LossGradient g = mlp_gradients(p, batch);
  const DenseLayer& out = g.gradient.layers.back();
  for (std::size_t row = 0; row < out.out; ++row) {
    for (std::size_t col = 0; col < out.in; ++col) {
      if (row == 2) continue;
      EXPECT_EQ(out.w(row, col), 0.0);
    }
    if (row != 2) EXPECT_EQ(out.bias[row], 0.0);
  }
  EXPECT_NE(out.bias[2], 0.0);
}

TEST(Gradients, MatchFiniteDifferences) {
  Rng rng(31337);
  for (int instance = 0; instance < 50; ++instance) {
    const std::size_t in = 1 + rng.below(4);
    const std::size_t actions = 1 + rng.below(3);
    std::vector<std::size_t> sizes{in};
    const std::size_t hidden_layers = 1 + rng.below(2);
    for (std::size_t i = 0; i < hidden_layers; ++i) sizes.push_back(1 + rng.below(6));
    sizes.push_back(actions);
    MlpParams p = MlpParams::glorot_uniform(sizes, rng);
    for (DenseLayer& l : p.layers) {
      for (double& b : l.bias) b = rng.uniform(-0.5, 0.5);
    }

    const std::size_t n = 1 + rng.below(8);
    std::vector<std::vector<double>> inputs(n);
    std::vector<TdSample> batch;
    for (auto& x : inputs) {
      for (std::size_t i = 0; i < in; ++i) x.push_back(rng.uniform(-2.0, 2.0));
      batch.push_back({x, static_cast<std::int64_t>(rng.below(actions)), rng.uniform(-3.0, 3.0)});
    }
    const auto check = testing::check_gradients(p, batch);
    EXPECT_LE(check.max_rel_error, 1e-4) << "instance " << instance;
    EXPECT_EQ(check.checked, p.num_parameters());
  }
}

TEST(Adam, ZeroGradientLeavesParams) {
  const MlpParams p0 = unit_network();
  MlpParams p = p0;
  AdamState state = AdamState::for_params(p);
  adam_step(p, AdamState::for_params(p).m, state, AdamConfig{});
  EXPECT_EQ(p, p0);
  EXPECT_EQ(state.t, 1);
}

TEST(Adam, FirstStepClosedForm) {
  std::array<double, 1> param{0.0};
  const std::array<double, 1> grad{1.0};
  std::array<double, 1> m{0.0};
  std::array<double, 1> v{0.0};
  adam_update(param, grad, m, v, 1, AdamConfig{});
  EXPECT_NEAR(param[0], -0.00029999999700000004, 1e-15);
}

TEST(Adam, BiasCorrectionMakesTwoStepsDifferFromDoubleLr) {
  std::array<double, 1> a{0.0}, am{0.0}, av{0.0};
  std::array<double, 1> b{0.0}, bm{0.0}, bv{0.0};
  const std::array<double, 1> g{0.7};
  adam_update(a, g, am, av, 1, AdamConfig{});
  adam_update(a, g, am, av, 2, AdamConfig{});
  adam_update(b, g, bm, bv, 1, AdamConfig{.learning_rate = 6e-4});
  EXPECT_NE(a[0], b[0]);
}

TEST(Adam, ShapeMismatchThrows) {
  MlpParams p = unit_network();
  AdamState s = AdamState::for_params(p);
  const std::size_t other[] = {2, 3, 2};
  EXPECT_THROW(adam_step(p, MlpParams::zeros(other), s, AdamConfig{}), std::invalid_argument);
}

TEST(ReplayBuffer, KeepsLastCapacityInsertions) {
  ReplayBuffer buffer(5);
  EXPECT_EQ(buffer.size(), 0u);
  for (int i = 0; i < 8; ++i) buffer.push(make_transition(i, false));
  EXPECT_TRUE(buffer.full());
  ASSERT_EQ(buffer.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(buffer.oldest(i).reward, 3.0 + i);
  EXPECT_THROW(ReplayBuffer(0), std::invalid_argument);
}

TEST(ReplayBuffer, SamplesOnlyFilledSlots) {
  ReplayBuffer buffer(100);
  for (int i = 0; i < 10; ++i) buffer.push(make_transition(i, false));
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    for (std::size_t idx : buffer.sample_indices(32, rng)) {
      ASSERT_LT(idx, 10u);
      EXPECT_LT(buffer.slot(idx).reward, 10.0);
    }
  }
  ReplayBuffer empty(4);
  EXPECT_THROW(empty.sample_indices(1, rng), std::invalid_argument);
}

TEST(Epsilon, ScheduleEndpointsAndMonotonicity) {
  const EpsilonSchedule s{1.0, 0.01, 100};
  EXPECT_EQ(epsilon_at(0, s), 1.0);
  EXPECT_NEAR(epsilon_at(50, s), 0.505, 1e-15);
  EXPECT_EQ(epsilon_at(100, s), 0.01);
  EXPECT_EQ(epsilon_at(100000, s), 0.01);
  double prev = 1.0;
  for (std::int64_t step = 0; step < 200; ++step) {
    const double e = epsilon_at(step, s);
    EXPECT_LE(e, prev);
    EXPECT_GE(e, 0.01);
    EXPECT_LE(e, 1.0);
    prev = e;
  }
}

TEST(SelectAction, GreedyAndTieBreak) {
  const std::size_t sizes[] = {1, 2};
  MlpParams p = MlpParams::zeros(sizes);
  Rng rng(0);
  const double x[] = {0.0};
  p.layers[0].bias = {0.1, 0.9};
  EXPECT_EQ(select_action(p, x, 0.0, rng), 1);
  p.layers[0].bias = {0.5, 0.5};
  EXPECT_EQ(select_action(p, x, 0.0, rng), 0);
}

TEST(SelectAction, FullyRandomIsUniform) {
  const std::size_t sizes[] = {1, 3};
  const MlpParams p = MlpParams::zeros(sizes);
  Rng rng(10);
  const double x[] = {0.0};
  std::array<int, 3> counts{};
  for (int i = 0; i < 30000; ++i) ++counts[select_action(p, x, 1.0, rng)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 450);
}

TEST(TrainStep, TdTargets) {
  const std::size_t sizes[] = {2, 2};
  MlpParams target = MlpParams::zeros(sizes);
  target.layers[0].bias = {1.0, 3.0};
  EXPECT_EQ(td_target(target, make_transition(2.0, true), 0.99), 2.0);
  EXPECT_EQ(td_target(target, make_transition(2.0, false), 0.0), 2.0);
  EXPECT_EQ(td_target(target, make_transition(2.0, false), 0.5), 3.5);
}

TEST(TrainStep, ZeroTargetsOnZeroNetworkChangeNothing) {
  const std::size_t sizes[] = {2, 4, 2};
  MlpParams online = MlpParams::zeros(sizes);
  const MlpParams target = online;
  AdamState opt = AdamState::for_params(online);
  ReplayBuffer buffer(64);
  for (int i = 0; i < 40; ++i) buffer.push(make_transition(0.0, true));
  TrainConfig config;
  Rng rng(0);
  EXPECT_EQ(train_step(online, target, buffer, opt, config, rng), 0.0);
  EXPECT_EQ(online, target);
}

TEST(TrainStep, RepeatedTransitionLossDecreases) {
  Rng rng(21);
  const std::size_t sizes[] = {2, 32, 32, 2};
  MlpParams online = MlpParams::glorot_uniform(sizes, rng);
  const MlpParams target = online;
  AdamState opt = AdamState::for_params(online);
  ReplayBuffer buffer(64);
  for (int i = 0; i < 64; ++i) buffer.push(make_transition(1.0, true, {0.4, -0.3}));
  TrainConfig config;
  double prev = train_step(online, target, buffer, opt, config, rng);
  for (int i = 0; i < 99; ++i) {
    const double loss = train_step(online, target, buffer, opt, config, rng);
    ASSERT_LT(loss, prev) << "step " << i;
    prev = loss;
  }
}

TEST(TrainStep, TooSmallBufferThrows) {
  Rng rng(0);
  const std::size_t sizes[] = {2, 2};
  MlpParams online = MlpParams::zeros(sizes);
  AdamState opt = AdamState::for_params(online);
  ReplayBuffer buffer(64);
  buffer.push(make_transition(0.0, true));
  EXPECT_THROW(train_step(online, online, buffer, opt, TrainConfig{}, rng), std::invalid_argument);
}

TEST(TargetSync, CopiesAndStaysIndependent) {
  Rng rng(2);
  const std::size_t sizes[] = {4, 8, 2};
  MlpParams online = MlpParams::glorot_uniform(sizes, rng);
  MlpParams target = MlpParams::zeros(sizes);
  target_sync(online, target);
  for (int i = 0; i < 20; ++i) {
    const double x[] = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                        rng.uniform(-1, 1)};
    EXPECT_EQ(mlp_forward(online, x), mlp_forward(target, x));
  }
  const double probe[] = {0.1, 0.2, 0.3, 0.4};
  const std::vector<double> before = mlp_forward(target, probe);
  online.layers[0].weights[0] += 1.0;
  EXPECT_EQ(mlp_forward(target, probe), before);
}

TEST(TrainConfig, DefaultsAndValidation) {
  const TrainConfig c;
  EXPECT_EQ(c.discount, 0.99);
  EXPECT_EQ(c.hidden_units, (std::vector<std::size_t>{32, 32}));
  EXPECT_EQ(c.batch_size, 32u);
  EXPECT_EQ(c.learning_rate, 3e-4);
  EXPECT_EQ(c.target_update_freq, 150);
  EXPECT_EQ(c.memory_size, 50000u);
  EXPECT_EQ(c.epsilon_start, 1.0);
  EXPECT_EQ(c.epsilon_final, 0.01);
  EXPECT_NO_THROW(c.validate());
  TrainConfig bad = c;
  bad.epsilon_final = 2.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.batch_size = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(TrainDqn, ZeroStepsGivesEmptyHistory) {
  std::unique_ptr<Env> env = make("CartPole-v0");
  Rng rng(0);
  const TrainResult r = train_dqn(TrainConfig{}, *env, 0, rng);
  EXPECT_TRUE(r.history.empty());
  EXPECT_EQ(r.train_steps, 0);
}

TEST(TrainDqn, SyncsEveryTargetPeriodAndTrainsAfterWarmup) {
  std::unique_ptr<Env> env = make("CartPole-v0");
  Rng rng(0);
  const TrainResult r = train_dqn(TrainConfig{}, *env, 3000, rng);
  EXPECT_EQ(r.target_syncs, 3000 / 150);
  EXPECT_EQ(r.train_steps, 3000 - 1000 + 1);
  std::int64_t steps = 0;
  for (const EpisodeRecord& e : r.history) steps += e.steps;
  EXPECT_LE(steps, 3000);
  EXPECT_TRUE(r.online.all_finite());
}

TEST(TrainDqn, SeededRunsAreIdentical) {
  auto run = [] {
    std::unique_ptr<Env> env = make("CartPole-v0");
    Rng rng(77);
    return train_dqn(TrainConfig{}, *env, 4000, rng);
  };
  const TrainResult a = run();
  const TrainResult b = run();
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    EXPECT_EQ(a.history[i].episode_return, b.history[i].episode_return);
    EXPECT_EQ(a.history[i].steps, b.history[i].steps);
  }
  EXPECT_EQ(a.online, b.online);
}

TEST(TrainDqn, RejectsContinuousActions) {
  std::unique_ptr<Env> env = make("Pendulum-v1");
  Rng rng(0);
  EXPECT_THROW(train_dqn(TrainConfig{}, *env, 10, rng), std::invalid_argument);
  EXPECT_THROW(train_cartpole(TrainConfig{}, *env, 10, rng), std::invalid_argument);
}

TEST(TrainDqn, PixelModeRuns) {
  std::unique_ptr<Env> env = make("CartPole-v0");
  Rng rng(0);
  TrainConfig config;
  config.observation = ObservationMode::kPixels;
  config.learning_starts = 32;
  config.memory_size = 64;
  const TrainResult r = train_dqn(config, *env, 80, rng);
  EXPECT_EQ(r.online.input_dim(), 84u * 84u);
  EXPECT_GT(r.train_steps, 0);
}

TEST(TrainingCsv, HeaderAndRow) {
  std::ostringstream out;
  write_training_csv_header(out);
  write_training_csv_row(out, {3, 21, 21.0, 0.5, 12.25});
  EXPECT_EQ(out.str(), "episode,steps,return,epsilon,wall_time_ms\n3,21,21,0.5,12.25\n");
}

TEST(TrailingMean, WindowsAndBest) {
  std::vector<EpisodeRecord> h;
  for (int i = 0; i < 10; ++i) h.push_back({i, 1, static_cast<double>(i), 0, 0});
  EXPECT_EQ(trailing_mean_return(h, 4), (6 + 7 + 8 + 9) / 4.0);
  EXPECT_EQ(trailing_mean_return(h, 100), 4.5);
  EXPECT_EQ(best_trailing_mean_return(h, 4), 7.5);
  EXPECT_EQ(best_trailing_mean_return(h, 11), 0.0);
}

}  // namespace
}  // namespace fastgym
