// Generator throughput across the instance families.  Degree-sequence
// generation is the interesting one: version 1 re-draws whole graphs on
// failure while version 2 retries from a stub array, so their costs diverge
// as n grows.

#include <benchmark/benchmark.h>

#include "hamlab/generators.hpp"

using namespace hamlab;

namespace {

void bm_gen_gnm(benchmark::State& state) {
    const int n = (int)state.range(0);
    const long m = degree_param_to_m(n, 1.09);
    Rng rng(0x9e41);
    for (auto _ : state) benchmark::DoNotOptimize(gen_gnm(n, m, rng));
}
BENCHMARK(bm_gen_gnm)->Arg(100)->Arg(400)->Arg(1600);

void bm_gen_gnstar(benchmark::State& state) {
    Rng rng(0x9e42);
    for (auto _ : state) benchmark::DoNotOptimize(gen_gnstar((int)state.range(0), rng));
}
BENCHMARK(bm_gen_gnstar)->Arg(100)->Arg(400)->Arg(1600);

void bm_gen_degreebound_v1(benchmark::State& state) {
    Rng rng(0x9e43);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_degreebound((int)state.range(0), 0.8, 1, rng));
}
BENCHMARK(bm_gen_degreebound_v1)->Arg(100)->Arg(400)->Arg(1600);

void bm_gen_degreebound_v2(benchmark::State& state) {
    Rng rng(0x9e44);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_degreebound((int)state.range(0), 0.8, 2, rng));
}
BENCHMARK(bm_gen_degreebound_v2)->Arg(100)->Arg(400)->Arg(1600);

void bm_gen_knight(benchmark::State& state) {
    const int side = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(gen_knight(1, 2, side, side));
}
BENCHMARK(bm_gen_knight)->Arg(8)->Arg(16)->Arg(32);

void bm_gen_iccs(benchmark::State& state) {
    Rng rng(0x9e45);
    for (auto _ : state) benchmark::DoNotOptimize(gen_iccs((int)state.range(0), 7, rng));
}
BENCHMARK(bm_gen_iccs)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
