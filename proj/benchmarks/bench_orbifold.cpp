#include <benchmark/benchmark.h>

#include "properclass/euclidean.hpp"

using namespace properclass;

static void BM_OrbifoldModel(benchmark::State& state) {
    EuclideanGroupSpec spec = catalogue_group("p3");
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        OrbifoldModel model = bbar_model(spec, k);
        benchmark::DoNotOptimize(model.complex.num_vertices);
    }
}
BENCHMARK(BM_OrbifoldModel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OrbifoldHomology(benchmark::State& state) {
    EuclideanGroupSpec spec = catalogue_group("pmm");
    OrbifoldModel model = bbar_model(spec, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        HomologyResult h = homology(model.complex);
        benchmark::DoNotOptimize(h.groups.size());
    }
}
BENCHMARK(BM_OrbifoldHomology)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
