// End-to-end solve cost on the families the toolkit targets.  Transition
// random graphs are near-linear (pruning does the work), knight boards show
// the cost of a denser regular structure, and the interconnected-cutset
// family is the deliberate worst case.

#include <benchmark/benchmark.h>

#include "hamlab/generators.hpp"
#include "hamlab/solver.hpp"

using namespace hamlab;

namespace {

void bm_solve_gnm_transition(benchmark::State& state) {
    const int n = (int)state.range(0);
    Rng rng(0x5041);
    const Graph g = gen_gnm(n, degree_param_to_m(n, 1.09), rng);
    SearchConfig cfg;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, cfg));
}
BENCHMARK(bm_solve_gnm_transition)->Arg(100)->Arg(400)->Arg(1600);

void bm_solve_gnstar(benchmark::State& state) {
    Rng rng(0x5042);
    const Graph g = gen_gnstar((int)state.range(0), rng);
    SearchConfig cfg;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, cfg));
}
BENCHMARK(bm_solve_gnstar)->Arg(100)->Arg(400)->Arg(1600);

void bm_solve_degreebound(benchmark::State& state) {
    Rng rng(0x5043);
    const Graph g = gen_degreebound((int)state.range(0), 0.8, 2, rng);
    SearchConfig cfg;
    cfg.seed = 7;
    cfg.node_limit = 1000000;
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, cfg));
}
BENCHMARK(bm_solve_degreebound)->Arg(100)->Arg(400)->Arg(1600);

void bm_solve_knight(benchmark::State& state) {
    const int side = (int)state.range(0);
    const Graph g = gen_knight(1, 2, side, side);
    SearchConfig cfg;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, cfg));
}
BENCHMARK(bm_solve_knight)->Arg(8)->Arg(12)->Arg(16);

void bm_solve_iccs(benchmark::State& state) {
    Rng rng(0x5044);
    const Graph g = gen_iccs((int)state.range(0), 6, rng);
    SearchConfig cfg;
    cfg.seed = 7;
    cfg.checks.components = cfg.checks.cutpoints = true;
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, cfg));
}
BENCHMARK(bm_solve_iccs)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
