#include <benchmark/benchmark.h>

#include "fastgym/envs/cartpole.hpp"
#include "fastgym/registry.hpp"

namespace fastgym {
namespace {

void BM_CartPoleAdvance(benchmark::State& state) {
  CartPoleState s{0.01, 0.0, 0.02, 0.0};
  std::int64_t a = 0;
  for (auto _ : state) {
    s = cartpole_advance(s, a);
    a ^= 1;
    if (cartpole_terminal(s)) s = {};
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CartPoleAdvance);

// Full step through the registry-made env (TimeLimit + contract checks).
void BM_EnvStep(benchmark::State& state, const char* id) {
  std::unique_ptr<Env> env = make(id);
  Rng rng(0);
  env->reset(0);
  for (auto _ : state) {
    StepResult r = env->step(sample(env->action_space(), rng));
    if (r.terminal) env->reset();
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_EnvStep, cartpole, "CartPole-v1");
BENCHMARK_CAPTURE(BM_EnvStep, mountain_car, "MountainCar-v0");
BENCHMARK_CAPTURE(BM_EnvStep, acrobot, "Acrobot-v1");
BENCHMARK_CAPTURE(BM_EnvStep, pendulum, "Pendulum-v1");

}  // namespace
}  // namespace fastgym
