#include <benchmark/benchmark.h>

#include "lieinv/catalog.hpp"
#include "lieinv/classify.hpp"
#include "lieinv/contract.hpp"
#include "lieinv/invariant.hpp"

using namespace lieinv;

static void BM_Sl2(benchmark::State& state) {
    LieAlgebra L = instantiate("sl2");
    Family f = static_cast<Family>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_invariant(L, f));
    state.SetLabel(family_name(f));
}
BENCHMARK(BM_Sl2)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

// The two-parameter family is the slowest four-dimensional phi.
static void BM_PhiG45(benchmark::State& state) {
    LieAlgebra L = instantiate("g4.5", {{"a", 2}, {"b", 3}});
    for (auto _ : state) benchmark::DoNotOptimize(phi(L));
}
BENCHMARK(BM_PhiG45)->Unit(benchmark::kMillisecond);

static void BM_PhiL177(benchmark::State& state) {
    LieAlgebra L = instantiate("L17.7", {{"a", 2}});
    for (auto _ : state) benchmark::DoNotOptimize(phi(L));
}
BENCHMARK(BM_PhiL177)->Unit(benchmark::kMillisecond);

static void BM_Identify4(benchmark::State& state) {
    LieAlgebra L = instantiate("g4.2", {{"a", 2}});
    for (auto _ : state) benchmark::DoNotOptimize(identify4(L));
}
BENCHMARK(BM_Identify4)->Unit(benchmark::kMillisecond);

static void BM_CriteriaReport(benchmark::State& state) {
    LieAlgebra L = instantiate("g4.7"), L0 = instantiate("g4.2(1)");
    for (auto _ : state) benchmark::DoNotOptimize(criteria_report(L, L0));
}
BENCHMARK(BM_CriteriaReport)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
