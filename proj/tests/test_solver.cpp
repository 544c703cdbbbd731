#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hamlab/generators.hpp"
#include "hamlab/solver.hpp"
#include "test_util.hpp"

using namespace hamlab;
using test::complete_graph;
using test::cycle_graph;
using test::k23;
using test::petersen;
using test::random_graph;

namespace {

Graph disjoint_triangles() {
    Graph g(6);
    for (int b : {0, 3}) {
        g.add_edge(b, b + 1);
        g.add_edge(b, b + 2);
        g.add_edge(b + 1, b + 2);
    }
    return g;
}

std::vector<SearchConfig> corpus_configs() {
    std::vector<SearchConfig> out;
    for (Heuristic h : {Heuristic::LowDegreeFirst, Heuristic::HighDegreeFirst,
                        Heuristic::RandomOrder}) {
        for (bool restarts : {true, false}) {
            for (bool with_checks : {false, true}) {
                SearchConfig cfg;
                cfg.heuristic = h;
                cfg.restarts_enabled = restarts;
                cfg.checks.components = with_checks;
                cfg.checks.cutpoints = with_checks;
                cfg.seed = 0x40b1 + out.size();
                out.push_back(cfg);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("solver enums have stable tokens") {
    CHECK(to_string(SolveOutcome::Kind::Hamiltonian) == "HC");
    CHECK(to_string(SolveOutcome::Kind::NonHamiltonian) == "NONHAM");
    CHECK(to_string(SolveOutcome::Kind::Timeout) == "TIMEOUT");
    CHECK(to_string(SolvePhase::InitialPrune) == "InitialPrune");
    CHECK(to_string(SolvePhase::Search) == "Search");
    CHECK(to_string(SolvePhase::Exhausted) == "Exhausted");
    CHECK(to_string(SolvePhase::LimitHit) == "LimitHit");
    CHECK(to_string(Heuristic::LowDegreeFirst) == "low");
    CHECK(to_string(Heuristic::HighDegreeFirst) == "high");
    CHECK(to_string(Heuristic::RandomOrder) == "random");
    CHECK(to_string(Hardness::Easy) == "easy");
    CHECK(to_string(Hardness::QuadraticallyHard) == "quadratic");
}

TEST_CASE("verify_cycle accepts exactly the spanning cycles") {
    const Graph g = cycle_graph(5);
    CHECK(verify_cycle(g, {0, 1, 2, 3, 4}));
    CHECK(verify_cycle(g, {1, 2, 3, 4, 0}));  // rotation
    CHECK(verify_cycle(g, {0, 4, 3, 2, 1}));  // reflection
    CHECK(!verify_cycle(g, {0, 1, 2, 3}));     // too short
    CHECK(!verify_cycle(g, {0, 1, 2, 3, 3}));  // repeat
    CHECK(!verify_cycle(g, {0, 1, 2, 3, 5}));  // out of range
    CHECK(!verify_cycle(g, {0, 1, 2, 4, 3}));  // (2,4) is not an edge
    CHECK(!verify_cycle(g, {}));
}

TEST_CASE("brute force oracle on known graphs") {
    const SolveOutcome c5 = brute_force_oracle(cycle_graph(5));
    REQUIRE(c5.kind == SolveOutcome::Kind::Hamiltonian);
    CHECK(c5.cycle == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(verify_cycle(cycle_graph(5), c5.cycle));

    const SolveOutcome k4 = brute_force_oracle(complete_graph(4));
    REQUIRE(k4.kind == SolveOutcome::Kind::Hamiltonian);
    CHECK(verify_cycle(complete_graph(4), k4.cycle));

    CHECK(brute_force_oracle(k23()).kind == SolveOutcome::Kind::NonHamiltonian);
    CHECK(brute_force_oracle(petersen()).kind == SolveOutcome::Kind::NonHamiltonian);

    CHECK(brute_force_oracle(Graph(2)).kind == SolveOutcome::Kind::NonHamiltonian);
    CHECK_THROWS_AS(brute_force_oracle(Graph(13)), std::invalid_argument);
}

TEST_CASE("backtrack-free families cost exactly n nodes") {
    for (const SearchConfig& cfg : corpus_configs()) {
        for (int n : {5, 20, 100}) {
            for (const Graph& g : {cycle_graph(n), complete_graph(n)}) {
                const SolveResult res = solve(g, cfg);
                REQUIRE(res.outcome.kind == SolveOutcome::Kind::Hamiltonian);
                CHECK(verify_cycle(g, res.outcome.cycle));
                CHECK(res.stats.nodes == static_cast<std::uint64_t>(n));
                CHECK(res.stats.restarts == 0);
                CHECK(res.stats.phase == SolvePhase::Search);
            }
        }
    }
    // A chord is pruned before the search starts, so it costs nothing.
    Graph g = cycle_graph(10);
    g.add_edge(0, 5);
    const SolveResult res = solve(g);
    REQUIRE(res.outcome.kind == SolveOutcome::Kind::Hamiltonian);
    CHECK(res.stats.nodes == 10);
}

TEST_CASE("initial rejections decide at zero nodes") {
    struct Case {
        Graph g;
        NonHamReason reason;
    };
    Graph path4(4);
    path4.add_edge(0, 1);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    Graph two_k4(7);
    for (const auto& block : {std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 4, 5, 6}})
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                two_k4.add_edge(block[i], block[j]);

    const Case cases[] = {
        {disjoint_triangles(), NonHamReason::Disconnected},
        {k23(), NonHamReason::TriForced},
        {path4, NonHamReason::MinDegree},
        {two_k4, NonHamReason::CutPoint},
    };
    for (const Case& c : cases) {
        const SolveResult res = solve(c.g);
        REQUIRE(res.outcome.kind == SolveOutcome::Kind::NonHamiltonian);
        CHECK(res.outcome.reason == c.reason);
        CHECK(res.stats.phase == SolvePhase::InitialPrune);
        CHECK(res.stats.nodes == 0);
        CHECK(res.stats.restarts == 0);
        CHECK(res.stats.attempt_nodes.empty());
    }
}

TEST_CASE("exhaustive search is conclusive with and without restarts") {
    SearchConfig no_restart;
    no_restart.restarts_enabled = false;
    const SolveResult single = solve(petersen(), no_restart);
    REQUIRE(single.outcome.kind == SolveOutcome::Kind::NonHamiltonian);
    CHECK(single.outcome.reason == NonHamReason::Exhausted);
    CHECK(single.stats.phase == SolvePhase::Search);
    CHECK(single.stats.restarts == 0);
    CHECK(single.stats.attempt_limits == std::vector<std::uint64_t>{0});  // unbounded
    CHECK(single.stats.nodes > 10);

    const SolveResult restarted = solve(petersen());
    REQUIRE(restarted.outcome.kind == SolveOutcome::Kind::NonHamiltonian);
    CHECK(restarted.outcome.reason == NonHamReason::Exhausted);
    CHECK(restarted.stats.phase == SolvePhase::Search);
    // Early attempts bust their budgets, so the schedule shows up in full.
    REQUIRE(!restarted.stats.attempt_limits.empty());
    for (std::size_t i = 0; i < restarted.stats.attempt_limits.size(); ++i) {
        CHECK(restarted.stats.attempt_limits[i] == (std::uint64_t{20} << i));
        CHECK(restarted.stats.attempt_nodes[i] <= restarted.stats.attempt_limits[i]);
    }
}

TEST_CASE("restart budgets double exactly and total work stays bounded") {
    Rng rng(91);
    const Graph g = gen_iccs(2, 6, rng);
    const int n = g.order();
    REQUIRE(n == 28);

    bool saw_restart = false;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SearchConfig cfg;
        cfg.seed = seed;
        const SolveResult res = solve(g, cfg);
        REQUIRE(res.outcome.kind == SolveOutcome::Kind::Hamiltonian);
        CHECK(verify_cycle(g, res.outcome.cycle));

        const auto& limits = res.stats.attempt_limits;
        const auto& nodes = res.stats.attempt_nodes;
        REQUIRE(limits.size() == nodes.size());
        REQUIRE(static_cast<std::size_t>(res.stats.restarts) + 1 == limits.size());
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < limits.size(); ++i) {
            CHECK(limits[i] == (static_cast<std::uint64_t>(2 * n) << i));
            CHECK(nodes[i] <= limits[i]);
            total += nodes[i];
        }
        CHECK(total == res.stats.nodes);
        CHECK(total <= 2 * limits.back());
        if (res.stats.restarts > 0) saw_restart = true;
    }
    CHECK(saw_restart);  // the instance actually exercises the schedule
}

TEST_CASE("node limit turns unfinished runs into TIMEOUT") {
    SearchConfig cfg;
    cfg.node_limit = 5;
    const SolveResult res = solve(cycle_graph(10), cfg);
    REQUIRE(res.outcome.kind == SolveOutcome::Kind::Timeout);
    CHECK(res.stats.phase == SolvePhase::LimitHit);
    CHECK(res.stats.nodes == 5);

    SearchConfig roomy;
    roomy.node_limit = 1000;
    roomy.time_limit_seconds = 60.0;
    const SolveResult ok = solve(cycle_graph(10), roomy);
    CHECK(ok.outcome.kind == SolveOutcome::Kind::Hamiltonian);
    CHECK(ok.stats.nodes == 10);

    // Limits do not preempt instant rejections.
    SearchConfig tight;
    tight.node_limit = 1;
    const SolveResult rejected = solve(disjoint_triangles(), tight);
    CHECK(rejected.outcome.kind == SolveOutcome::Kind::NonHamiltonian);
    CHECK(rejected.stats.phase == SolvePhase::InitialPrune);
    CHECK(rejected.stats.nodes == 0);
}

TEST_CASE("expired time limit turns long runs into TIMEOUT") {
    Rng rng(7);
    const Graph g = gen_iccs(3, 6, rng);
    SearchConfig cfg;
    cfg.time_limit_seconds = 1e-9;
    cfg.node_limit = 2'000'000;  // backstop so the test cannot hang
    const SolveResult res = solve(g, cfg);
    REQUIRE(res.outcome.kind == SolveOutcome::Kind::Timeout);
    CHECK(res.stats.phase == SolvePhase::LimitHit);
}

TEST_CASE("start vertex pin and argument validation") {
    SearchConfig cfg;
    cfg.start_vertex = 3;
    const SolveResult res = solve(cycle_graph(10), cfg);
    REQUIRE(res.outcome.kind == SolveOutcome::Kind::Hamiltonian);
    CHECK(res.outcome.cycle.front() == 3);

    SearchConfig bad_start;
    bad_start.start_vertex = 10;
    CHECK_THROWS_AS(solve(cycle_graph(10), bad_start), std::invalid_argument);

    SearchConfig bad_mult;
    bad_mult.restart_multiplier = 0.5;
    CHECK_THROWS_AS(solve(cycle_graph(10), bad_mult), std::invalid_argument);

    SearchConfig bad_factor;
    bad_factor.initial_limit_factor = 0.0;
    CHECK_THROWS_AS(solve(cycle_graph(10), bad_factor), std::invalid_argument);

    Graph tiny(2);
    tiny.add_edge(0, 1);
    CHECK_THROWS_AS(solve(tiny), std::invalid_argument);
}

TEST_CASE("the input graph is never modified") {
    Rng rng(5);
    for (const Graph& g : {gen_iccs(2, 6, rng), k23(), cycle_graph(12)}) {
        const Graph copy = g;
        (void)solve(g);
        CHECK(g == copy);
    }
}

TEST_CASE("fixed seeds reproduce runs exactly") {
    Rng rng(17);
    const Graph g = gen_iccs(2, 6, rng);
    SearchConfig cfg;
    cfg.heuristic = Heuristic::RandomOrder;
    cfg.seed = 1234;
    const SolveResult a = solve(g, cfg);
    const SolveResult b = solve(g, cfg);
    CHECK(a.outcome.kind == b.outcome.kind);
    CHECK(a.outcome.cycle == b.outcome.cycle);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.restarts == b.stats.restarts);
    CHECK(a.stats.attempt_nodes == b.stats.attempt_nodes);
}

TEST_CASE("neighbor ordering follows the heuristic") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);  // degrees: 0:3, 1:2, 2:2, 3:1
    Rng rng(1);
    const std::vector<int> cands{1, 2, 3};
    CHECK(order_neighbors(g, cands, Heuristic::LowDegreeFirst, rng) ==
          std::vector<int>{3, 1, 2});
    CHECK(order_neighbors(g, cands, Heuristic::HighDegreeFirst, rng) ==
          std::vector<int>{1, 2, 3});
    std::vector<int> shuffled = order_neighbors(g, cands, Heuristic::RandomOrder, rng);
    std::sort(shuffled.begin(), shuffled.end());
    CHECK(shuffled == cands);
}

TEST_CASE("hardness is a node-count threshold") {
    SearchStats stats;
    stats.nodes = 99;
    CHECK(classify_hardness(stats, 10) == Hardness::Easy);
    stats.nodes = 100;
    CHECK(classify_hardness(stats, 10) == Hardness::QuadraticallyHard);

    SearchConfig cfg;
    CHECK(robust_hardness_qualifier(cfg));
    cfg.restart_multiplier = 3.0;
    CHECK(!robust_hardness_qualifier(cfg));
    cfg.restart_multiplier = 2.0;
    cfg.restarts_enabled = false;
    CHECK(!robust_hardness_qualifier(cfg));
}

TEST_CASE("solver agrees with brute force on a random corpus") {
    const std::vector<SearchConfig> configs = corpus_configs();
    Rng rng(0x5eed0004);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + uniform_int_below(rng, 7);  // 4..10
        const long full = static_cast<long>(n) * (n - 1) / 2;
        const long m = 3 + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(full - 2)));
        const Graph g = random_graph(n, m, rng);
        const SolveOutcome truth = brute_force_oracle(g);

        for (const SearchConfig& cfg : configs) {
            const SolveResult res = solve(g, cfg);
            REQUIRE(res.outcome.kind == truth.kind);
            if (res.outcome.kind == SolveOutcome::Kind::Hamiltonian) {
                CHECK(verify_cycle(g, res.outcome.cycle));
                CHECK(res.stats.phase == SolvePhase::Search);
            } else {
                CHECK((res.stats.phase == SolvePhase::InitialPrune ||
                       res.stats.phase == SolvePhase::Search));
            }
            // An answer costs zero nodes exactly when pruning alone decided.
            CHECK((res.stats.nodes == 0) ==
                  (res.stats.phase == SolvePhase::InitialPrune));
        }
    }
}
