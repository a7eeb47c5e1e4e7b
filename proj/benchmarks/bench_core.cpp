#include <benchmark/benchmark.h>

#include "floe/bifurcation.hpp"
#include "floe/integrals.hpp"

using namespace floe;

namespace {
const ForcingParams kBase = ForcingParams{}.with_lm(1.25);
}

static void BM_StandardForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(to_standard_form(kBase));
}
BENCHMARK(BM_StandardForm);

static void BM_WeightedIntegral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(integral_i_plus(kBase, 0.27, 1.27));
}
BENCHMARK(BM_WeightedIntegral);

static void BM_BoundaryTimes(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(find_boundary_times(kBase));
}
BENCHMARK(BM_BoundaryTimes);

static void BM_InverseMapping(benchmark::State& state) {
    StandardTarget t = StandardTarget::from(to_standard_form(kBase));
    t.delta_psi = 0.30;
    for (auto _ : state) benchmark::DoNotOptimize(from_standard_form(t, RootChoice::smaller, kBase));
}
BENCHMARK(BM_InverseMapping);

static void BM_SeasonalSolutions(benchmark::State& state) {
    const ForcingParams p = kBase.with_lm(0.92);
    SeasonalSolverOptions opts;
    opts.n_scan = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(seasonal_solutions(p, opts));
}
BENCHMARK(BM_SeasonalSolutions)->Arg(500)->Arg(2000);

static void BM_SimulateDecade(benchmark::State& state) {
    const ForcingParams p = kBase.with_lm(0.92);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_filippov(p, -1.0, 0.0, 10.0));
}
BENCHMARK(BM_SimulateDecade);

static void BM_IntegrateYearSmoothed(benchmark::State& state) {
    const ForcingParams p = kBase.with_delta_e(0.08);
    for (auto _ : state) benchmark::DoNotOptimize(integrate_year(p, -0.5, 0.0));
}
BENCHMARK(BM_IntegrateYearSmoothed);

static void BM_LocateBifurcations(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(locate_bifurcations(kBase, {0.6, 1.6}));
}
BENCHMARK(BM_LocateBifurcations)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
