#include <benchmark/benchmark.h>

#include <vector>

#include "fastgym/render/raster.hpp"
#include "fastgym/render/scenes.hpp"

namespace fastgym {
namespace {

void BM_Clear(benchmark::State& state) {
  FrameBuffer fb(600, 400);
  for (auto _ : state) {
    clear(fb, colors::kWhite);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(fb.size_bytes()));
}
BENCHMARK(BM_Clear);

void BM_FillPolygon(benchmark::State& state) {
  FrameBuffer fb(600, 400);
  const std::vector<PointF> quad = {{100.5, 50.25}, {420.0, 80.0}, {380.75, 330.5}, {90.0, 300.0}};
  for (auto _ : state) {
    fill_polygon(fb, quad, Color{200, 10, 10});
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_FillPolygon);

void BM_DrawLine(benchmark::State& state) {
  FrameBuffer fb(600, 400);
  const int width = static_cast<int>(state.range(0));
  for (auto _ : state) {
    draw_line(fb, 10, 20, 580, 370, width, colors::kBlack);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_DrawLine)->Arg(1)->Arg(6);

void BM_FillCircle(benchmark::State& state) {
  FrameBuffer fb(600, 400);
  for (auto _ : state) {
    fill_circle(fb, 300, 200, 40.0, Color{0, 0, 200});
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_FillCircle);

void BM_RenderScene(benchmark::State& state, EnvState s) {
  FrameBuffer fb(600, 400);
  for (auto _ : state) {
    render_scene(s, fb);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_RenderScene, cartpole, EnvState{CartPoleState{0.3, 0.0, 0.1, 0.0}});
BENCHMARK_CAPTURE(BM_RenderScene, mountain_car, EnvState{MountainCarState{-0.4, 0.01}});
BENCHMARK_CAPTURE(BM_RenderScene, acrobot, EnvState{AcrobotState{0.5, -0.7, 0.0, 0.0}});
BENCHMARK_CAPTURE(BM_RenderScene, pendulum, EnvState{PendulumState{1.2, 0.0}});

void BM_Grayscale84(benchmark::State& state) {
  const FrameBuffer fb = render_scene(CartPoleState{});
  for (auto _ : state) benchmark::DoNotOptimize(grayscale_84(fb));
}
BENCHMARK(BM_Grayscale84);

}  // namespace
}  // namespace fastgym
