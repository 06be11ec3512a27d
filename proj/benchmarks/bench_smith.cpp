#include <benchmark/benchmark.h>

#include <random>

#include "properclass/smith.hpp"

using namespace properclass;

static void BM_DenseSmith(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    int n = static_cast<int>(state.range(0));
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    for (auto _ : state) {
        SmithResult r = smith_normal_form(m);
        benchmark::DoNotOptimize(r.d.at(0, 0));
    }
}
BENCHMARK(BM_DenseSmith)->Arg(8)->Arg(16)->Arg(32);

static void BM_SparseInvariants(benchmark::State& state) {
    // banded boundary-like matrix
    int n = static_cast<int>(state.range(0));
    SparseIntMatrix m(n, 2 * n);
    for (int j = 0; j < 2 * n; ++j) {
        m.add(j % n, j, 1);
        m.add((j + 1) % n, j, -1);
        if (j % 3 == 0) m.add((j + 2) % n, j, 1);
    }
    for (auto _ : state) {
        SmithInvariants inv = sparse_smith_invariants(m);
        benchmark::DoNotOptimize(inv.rank);
    }
}
BENCHMARK(BM_SparseInvariants)->Arg(256)->Arg(1024)->Arg(4096);

BENCHMARK_MAIN();
