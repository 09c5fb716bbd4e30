#include <cmath>
#include <random>

#include "benchmark/benchmark.h"
#include "steergp/config.h"
#include "steergp/kernel.h"
#include "steergp/scnn.h"

namespace {

using namespace steergp;

ModeField RandomField(std::size_t modes, std::size_t channels) {
  const int half = static_cast<int>(modes) / 2;
  ModeField f(0, RadialGrid::Uniform(4, 2.0), channels,
              {-half, -half + static_cast<int>(modes) - 1});
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (Complex& v : f.data()) v = Complex(normal(rng), normal(rng));
  return f;
}

void BM_Cubic(benchmark::State& state, CubicMethod method) {
  const ModeField z = RandomField(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(apply_cubic(z, method));
}
BENCHMARK_CAPTURE(BM_Cubic, naive, CubicMethod::kNaive)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_Cubic, fft, CubicMethod::kFft)->Arg(16)->Arg(64)->Arg(256);

NetworkConfig TwoBlocks(std::size_t width) {
  NetworkConfig c;
  c.depth = 2;
  c.widths = {1, width, width};
  c.filter_modes = {0, 0};
  c.grid = RadialGrid::Uniform(2, 2.0);
  c.input.terms = {{0, 0, ConstantProfile{1.0}}};
  return c;
}

void BM_Forward(benchmark::State& state) {
  const NetworkConfig c = TwoBlocks(static_cast<std::size_t>(state.range(0)));
  const ModeField x = make_input(c);
  const FilterStack filters = sample_filters(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(forward(c, filters, x));
}
BENCHMARK(BM_Forward)->Arg(64)->Arg(512);

void BM_SampleFilters(benchmark::State& state) {
  const NetworkConfig c = TwoBlocks(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_filters(c, ++seed));
}
BENCHMARK(BM_SampleFilters)->Arg(64)->Arg(512);

void BM_EmpiricalKernel(benchmark::State& state) {
  const NetworkConfig c = TwoBlocks(static_cast<std::size_t>(state.range(0)));
  const ModeField x = make_input(c);
  for (auto _ : state) benchmark::DoNotOptimize(empirical_kernel(c, x, 2, 16, 3));
}
BENCHMARK(BM_EmpiricalKernel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
