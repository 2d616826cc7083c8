#include <vector>

#include <benchmark/benchmark.h>

#include <orthokern/ball_kernels.hpp>
#include <orthokern/cube_kernels.hpp>
#include <orthokern/quadrature.hpp>

using namespace orthokern;

static void BM_GaussJacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi(n, 0.3, -0.4));
}
BENCHMARK(BM_GaussJacobi)->RangeMultiplier(4)->Range(8, 512);

static void BM_SimplexRule(benchmark::State& state) {
  const std::vector<double> a{0.5, 1.0, 1.5};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simplex_rule(3, a, n));
}
BENCHMARK(BM_SimplexRule)->Arg(10)->Arg(40);

static void BM_KernelCubeDirect(benchmark::State& state) {
  const CubeWeight w({0.3, 1.1, 2.0});
  const std::vector<double> x{0.2, -0.5, 0.7}, y{-0.1, 0.4, 0.9};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_cube_direct(n, w, x, y));
}
BENCHMARK(BM_KernelCubeDirect)->Arg(5)->Arg(20);

static void BM_KernelCubeClosed(benchmark::State& state) {
  const CubeWeight w({0.3, 1.1, 2.0});
  const std::vector<double> x{0.2, -0.5, 0.7};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_cube_at_one_closed(n, w, x, n / 2 + 4));
}
BENCHMARK(BM_KernelCubeClosed)->Arg(5)->Arg(20);

static void BM_KernelBallDirect(benchmark::State& state) {
  const BallWeight w(3, 1.2, 0.7);
  const std::vector<double> x{0.3, -0.5, 0.2}, y{0.1, 0.6, -0.4};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_ball_direct(n, w, x, y));
}
BENCHMARK(BM_KernelBallDirect)->Arg(4)->Arg(15);

static void BM_KernelBallClosed(benchmark::State& state) {
  const BallWeight w(3, 1.2, 0.7);
  const std::vector<double> x{0.3, -0.5, 0.2}, y{0.1, 0.6, -0.4};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_ball_closed(n, w, x, y, ball_default_order(n)));
}
BENCHMARK(BM_KernelBallClosed)->Arg(4)->Arg(15);

static void BM_LebesgueOrigin(benchmark::State& state) {
  const BallWeight w(2, 0.5, 0.5);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_at_origin(CesaroSpec(n, 1.25), w));
}
BENCHMARK(BM_LebesgueOrigin)->Arg(16)->Arg(128);
BENCHMARK_MAIN();
