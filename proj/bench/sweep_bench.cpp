// Serial reference runner vs the OpenMP runner on the heavier sweeps.

#include "novikov/checks.hpp"

#include <benchmark/benchmark.h>

using namespace novikov;

namespace {

CheckOptions options(Execution mode) {
    CheckOptions o;
    o.trials = 200;
    o.seed = 1;
    o.mode = mode;
    return o;
}

void BM_LeftSymmetryRandom(benchmark::State& state) {
    const auto mode = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
    const auto o = options(mode);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_novikov_random(Identity::LeftSym, o));
    }
    state.SetLabel(mode == Execution::Serial ? "serial" : "openmp");
}

void BM_AssocBasis(benchmark::State& state) {
    const auto mode = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_assoc_basis(6, mode));
    }
    state.SetLabel(mode == Execution::Serial ? "serial" : "openmp");
}

void BM_IsoBasis(benchmark::State& state) {
    const auto mode = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
    const auto params = default_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_iso_basis(10, params, mode));
    }
    state.SetLabel(mode == Execution::Serial ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_LeftSymmetryRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssocBasis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsoBasis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
