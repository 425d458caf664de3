#include <benchmark/benchmark.h>

#include "grosslip/grossone.hpp"

using namespace grosslip;

static void BM_GrossAdd(benchmark::State& state) {
    GrossNumber a = parse_gross("1@1+-12.0312@-1");
    GrossNumber b = parse_gross("2@1+3@0+0.5@-1");
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_GrossAdd);

static void BM_GrossMul(benchmark::State& state) {
    GrossNumber a = parse_gross("1@1+-12.0312@-1");
    GrossNumber b = parse_gross("2@1+3@0+0.5@-1");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GrossMul);

static void BM_GrossCompare(benchmark::State& state) {
    GrossNumber a = parse_gross("1@1+-12.0312@-1");
    GrossNumber b = parse_gross("1@1+-12.0313@-1");
    for (auto _ : state) benchmark::DoNotOptimize(a < b);
}
BENCHMARK(BM_GrossCompare);

static void BM_GrossParse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_gross("1@1+-12.0312@-1+5e-3@-4"));
}
BENCHMARK(BM_GrossParse);

static void BM_GrossPrint(benchmark::State& state) {
    GrossNumber a = parse_gross("1@1+-12.0312@-1+5e-3@-4");
    for (auto _ : state) benchmark::DoNotOptimize(to_literal(a));
}
BENCHMARK(BM_GrossPrint);
