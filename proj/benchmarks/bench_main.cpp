#include <benchmark/benchmark.h>

#include "juntalab/inequalities.hpp"
#include "juntalab/junta.hpp"
#include "juntalab/quadrature.hpp"
#include "juntalab/smoothing.hpp"

using namespace juntalab;

namespace {

TrigPoly make_poly(int dim, int max_modes) {
    RandomPolySpec spec;
    spec.dim = dim;
    spec.degree = 3;
    spec.scale = 0.5;
    spec.seed = 42;
    spec.max_modes = max_modes;
    spec.normalize = true;
    return random_trigpoly(spec);
}

void BM_HeatApply(benchmark::State& state) {
    TrigPoly f = make_poly(static_cast<int>(state.range(0)), 64);
    for (auto _ : state) benchmark::DoNotOptimize(heat(f, 0.05));
}
BENCHMARK(BM_HeatApply)->Arg(2)->Arg(4);

void BM_L1NormGrid(benchmark::State& state) {
    TrigPoly f = make_poly(3, static_cast<int>(state.range(0)));
    const auto quad = QuadratureSpec::tensor_grid(32);
    for (auto _ : state) benchmark::DoNotOptimize(lp_norm_est(f, 1.0, quad));
}
BENCHMARK(BM_L1NormGrid)->Arg(8)->Arg(64);

void BM_L1NormMonteCarlo(benchmark::State& state) {
    TrigPoly f = make_poly(5, 16);
    const auto quad = QuadratureSpec::monte_carlo(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(lp_norm_est(f, 1.0, quad));
}
BENCHMARK(BM_L1NormMonteCarlo)->Arg(1 << 12)->Arg(1 << 16);

void BM_Influences(benchmark::State& state) {
    TrigPoly f = make_poly(static_cast<int>(state.range(0)), 16);
    const auto quad = QuadratureSpec::default_for(f.dim(), 7);
    for (auto _ : state) benchmark::DoNotOptimize(influences(f, quad));
}
BENCHMARK(BM_Influences)->Arg(3)->Arg(5);

void BM_ExtractJunta(benchmark::State& state) {
    TrigPoly f = make_poly(static_cast<int>(state.range(0)), 12);
    EngineConfig cfg = EngineConfig::defaults(f.dim(), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_junta(ProductFn(f), 0.2, ScheduleMode::Empirical, cfg));
}
BENCHMARK(BM_ExtractJunta)->Arg(3)->Arg(5);

void BM_HeatGaussianModes(benchmark::State& state) {
    TrigPoly f = make_poly(3, 32);
    for (auto _ : state)
        benchmark::DoNotOptimize(heat_gaussian(f, 0.1, state.range(0), 9));
}
BENCHMARK(BM_HeatGaussianModes)->Arg(1 << 10)->Arg(1 << 12);

void BM_VerifyHypercontractivity(benchmark::State& state) {
    TrigPoly f = make_poly(3, 16);
    const auto quad = QuadratureSpec::default_for(3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hypercontractivity(f, 0.5, quad));
}
BENCHMARK(BM_VerifyHypercontractivity);

}  // namespace

BENCHMARK_MAIN();
