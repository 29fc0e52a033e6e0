#include <benchmark/benchmark.h>

#include "horn/spectral.hpp"
#include "horn/sweep.hpp"

using namespace horn;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_Prop2(benchmark::State& state) {
    SweepConfig c;
    c.p = 2;
    c.max_part = 5;
    c.execution = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_prop2(c));
}

void BM_ClVsLr(benchmark::State& state) {
    SweepConfig c;
    c.p = 2;
    c.max_part = 4;
    c.execution = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_cl_vs_lr(c));
}

void BM_Lpp(benchmark::State& state) {
    SweepConfig c;
    c.p = 2;
    c.max_part = 5;
    c.execution = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_lpp(c));
}

void BM_MonteCarlo(benchmark::State& state) {
    const std::vector<double> sigma{5, 3, 2, 0};
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_q(sigma, 2000, 1, SamplingMode::random, mode(state)));
}

}  // namespace

// Argument 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_Prop2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClVsLr)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lpp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
