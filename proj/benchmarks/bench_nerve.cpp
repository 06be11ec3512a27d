#include <benchmark/benchmark.h>

#include "properclass/nerve.hpp"
#include "properclass/orbit.hpp"

using namespace properclass;

static void BM_NerveCells(benchmark::State& state) {
    PermGroup g = catalogue_perm_group("S3");
    StandardModel m = standard_model(g, finite_family(g));
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TruncatedSimplicialSet n = nerve_truncated(m.total.category, d);
        benchmark::DoNotOptimize(n.cell_count(d));
    }
}
BENCHMARK(BM_NerveCells)->Arg(3)->Arg(4)->Arg(5);

static void BM_NerveHomology(benchmark::State& state) {
    PermGroup g = catalogue_perm_group("S3");
    StandardModel m = standard_model(g, finite_family(g));
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HomologyResult h = homology_of_nerve(m.total.category, d);
        benchmark::DoNotOptimize(h.groups.size());
    }
}
BENCHMARK(BM_NerveHomology)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
