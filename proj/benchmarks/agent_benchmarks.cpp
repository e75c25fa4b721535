#include <benchmark/benchmark.h>

#include "fastgym/agent/dqn.hpp"

namespace fastgym {
namespace {

const std::size_t kSizes[] = {4, 32, 32, 2};

void BM_MlpForward(benchmark::State& state) {
  Rng rng(0);
  const MlpParams p = MlpParams::glorot_uniform(kSizes, rng);
  const double x[] = {0.01, -0.2, 0.03, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(mlp_forward(p, x));
}
BENCHMARK(BM_MlpForward);

void BM_MlpGradients(benchmark::State& state) {
  Rng rng(0);
  const MlpParams p = MlpParams::glorot_uniform(kSizes, rng);
  std::vector<std::vector<double>> xs(32, std::vector<double>{0.01, -0.2, 0.03, 0.4});
  std::vector<TdSample> batch;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i][0] = 0.01 * static_cast<double>(i);
    batch.push_back({xs[i], static_cast<std::int64_t>(i % 2), 1.0});
  }
  for (auto _ : state) benchmark::DoNotOptimize(mlp_gradients(p, batch));
}
BENCHMARK(BM_MlpGradients);

void BM_TrainStep(benchmark::State& state) {
  Rng rng(0);
  MlpParams online = MlpParams::glorot_uniform(kSizes, rng);
  const MlpParams target = online;
  AdamState opt = AdamState::for_params(online);
  ReplayBuffer buffer(1000);
  for (int i = 0; i < 1000; ++i) {
    const double v = 0.001 * i;
    buffer.push({Observation({v, -v, v, 0.0}), i % 2, 1.0, Observation({v, v, -v, 0.0}), i % 7 == 0});
  }
  const TrainConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_step(online, target, buffer, opt, config, rng));
  }
}
BENCHMARK(BM_TrainStep);

}  // namespace
}  // namespace fastgym
