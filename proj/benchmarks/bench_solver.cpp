#include <benchmark/benchmark.h>

#include "grosslip/solver.hpp"

using namespace grosslip;

namespace {

template <ScalarLike S>
MethodConfig<S> config(CharacteristicKind c, EstimatorKind e) {
    MethodConfig<S> out;
    out.characteristic = c;
    out.estimator = e;
    out.reliability = c == CharacteristicKind::geometric ? 1.1 : 1.5;
    return out;
}

}  // namespace

static void BM_SolveF3GeomLtm(benchmark::State& state) {
    Problem f3 = hansen_f3();
    auto cfg = config<double>(CharacteristicKind::geometric, EstimatorKind::maximum_local);
    for (auto _ : state) benchmark::DoNotOptimize(solve(f3, cfg));
}
BENCHMARK(BM_SolveF3GeomLtm)->Unit(benchmark::kMillisecond);

static void BM_SolveF3InfGl(benchmark::State& state) {
    Problem f3 = hansen_f3();
    auto cfg = config<double>(CharacteristicKind::information, EstimatorKind::global);
    for (auto _ : state) benchmark::DoNotOptimize(solve(f3, cfg));
}
BENCHMARK(BM_SolveF3InfGl)->Unit(benchmark::kMillisecond);

static void BM_SolveF3GrossScaled(benchmark::State& state) {
    ScaledProblem<GrossNumber> scaled{hansen_f3(), GrossNumber::monomial(1.0, -1),
                                      GrossNumber::grossone()};
    auto cfg =
        config<GrossNumber>(CharacteristicKind::geometric, EstimatorKind::maximum_local);
    for (auto _ : state) benchmark::DoNotOptimize(solve(scaled, cfg));
}
BENCHMARK(BM_SolveF3GrossScaled)->Unit(benchmark::kMillisecond);

static void BM_GridOracleF3(benchmark::State& state) {
    Problem f3 = hansen_f3();
    for (auto _ : state) benchmark::DoNotOptimize(grid_min(f3, 1e-3));
}
BENCHMARK(BM_GridOracleF3)->Unit(benchmark::kMillisecond);
