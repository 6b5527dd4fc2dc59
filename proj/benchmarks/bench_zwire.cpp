#include <benchmark/benchmark.h>

#include "zwire/zwire.hpp"

using namespace zwire;

static void BM_GammaPiecewise(benchmark::State& state) {
    const PlanarField f = scheme1_field(0, 0, 3.0);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_piecewise(f, 3.0, N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_GammaPiecewise)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

static void BM_SolveCached(benchmark::State& state) {
    const PlanarField f = scheme2_field(0, 0, 6.0);
    const TransferEngine eng(f, 4096);
    for (auto _ : state) benchmark::DoNotOptimize(solve_scattering(eng.build(5.0), f.length()));
}
BENCHMARK(BM_SolveCached);

static void BM_Sweep200(benchmark::State& state) {
    const PlanarField f = scheme1_field(0, 0, 3.0);
    for (auto _ : state) {
        const TransferEngine eng(f, 4096);
        double acc = 0.0;
        for (int i = 0; i < 200; ++i) acc += solve_scattering(eng.build(1.01 + 8.99 * i / 199), f.length()).conductance;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_Sweep200)->Unit(benchmark::kMillisecond);

static void BM_FdOracle(benchmark::State& state) {
    const PlanarField f = scheme1_field(0, 0, 3.0);
    const int M = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fd_scattering_cells(f, 2.0, M));
}
BENCHMARK(BM_FdOracle)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);

static void BM_WallSolver(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(magnetic_wall_scattering({0.0, 1.5707963267948966, 2.0, 5.0}));
}
BENCHMARK(BM_WallSolver);
BENCHMARK_MAIN();
