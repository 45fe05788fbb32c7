#include <benchmark/benchmark.h>

#include "timcomp/bounds.hpp"
#include "timcomp/fixtures.hpp"
#include "timcomp/scheduling.hpp"
#include "timcomp/topology.hpp"

namespace {

void BM_AnalyzeFig5(benchmark::State& state) {
    const timcomp::Topology topo = timcomp::fixture_fig5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(timcomp::analyze(topo, {}));
    }
}
BENCHMARK(BM_AnalyzeFig5)->Unit(benchmark::kMillisecond);

void BM_FractionalCover(benchmark::State& state) {
    const timcomp::Topology topo = timcomp::fixture_fig5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(timcomp::fractional_cover(topo));
    }
}
BENCHMARK(BM_FractionalCover)->Unit(benchmark::kMicrosecond);

void BM_SelectiveChromatic(benchmark::State& state) {
    const timcomp::Topology topo = timcomp::fixture_fig5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(timcomp::selective_chromatic(topo));
    }
}
BENCHMARK(BM_SelectiveChromatic)->Unit(benchmark::kMicrosecond);

void BM_CanonicalKey(benchmark::State& state) {
    const timcomp::Topology topo = timcomp::fixture_fig5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(timcomp::canonical_key(topo));
    }
}
BENCHMARK(BM_CanonicalKey)->Unit(benchmark::kMicrosecond);

void BM_GeneratorBound(benchmark::State& state) {
    const timcomp::Topology topo = timcomp::fixture_fig5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(timcomp::generator_bound(topo));
    }
}
BENCHMARK(BM_GeneratorBound)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
