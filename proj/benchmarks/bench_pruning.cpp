// Microbenchmarks for the reduction machinery: the prune fixpoint, the full
// pre-search check, and the linear-time certificates.  Inputs are seeded
// transition-density random graphs, where degree-2 chains make the fixpoint
// do real work.

#include <benchmark/benchmark.h>

#include "hamlab/experiments.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/pruning.hpp"

using namespace hamlab;

namespace {

Graph transition_gnm(int n) {
    Rng rng(0xbe11);
    return gen_gnm(n, degree_param_to_m(n, 1.09), rng);
}

void bm_prune_fixpoint(benchmark::State& state) {
    const Graph g = transition_gnm((int)state.range(0));
    for (auto _ : state) {
        Graph work = g;
        DeletionJournal journal;
        benchmark::DoNotOptimize(prune_fixpoint(work, journal));
    }
}
BENCHMARK(bm_prune_fixpoint)->Arg(100)->Arg(400)->Arg(1600);

void bm_initial_check(benchmark::State& state) {
    const Graph g = transition_gnm((int)state.range(0));
    for (auto _ : state) {
        Graph work = g;
        DeletionJournal journal;
        benchmark::DoNotOptimize(initial_check(work, journal));
    }
}
BENCHMARK(bm_initial_check)->Arg(100)->Arg(400)->Arg(1600);

void bm_parity_test(benchmark::State& state) {
    Rng rng(0xbe12);
    const Graph g = gen_degreebound((int)state.range(0), 0.9, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(forced_degree_parity_test(g));
}
BENCHMARK(bm_parity_test)->Arg(1000)->Arg(4000);

void bm_count_3d2(benchmark::State& state) {
    Rng rng(0xbe13);
    const Graph g = gen_degreebound((int)state.range(0), 0.9, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(count_3d2(g));
}
BENCHMARK(bm_count_3d2)->Arg(1000)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
