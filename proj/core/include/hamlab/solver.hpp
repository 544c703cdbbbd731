#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/pruning.hpp"
#include "hamlab/rng.hpp"

namespace hamlab {

enum class Heuristic { LowDegreeFirst, HighDegreeFirst, RandomOrder };
std::string_view to_string(Heuristic h);

struct InSearchChecks {
    bool components = false;  // backtrack when the remaining graph disconnects
    bool cutpoints = false;   // backtrack when it acquires an articulation point
};

struct SearchConfig {
    Heuristic heuristic = Heuristic::LowDegreeFirst;

    // Iterated restarts: attempt i gets a node budget M_i, with
    // M_1 = initial_limit_factor * n and M_{i+1} = restart_multiplier * M_i.
    // Each attempt searches a fresh copy of the reduced graph from a fresh
    // start vertex.  An attempt that exhausts below its budget is conclusive.
    // With the default doubling schedule, total work stays within twice the
    // final attempt's budget.
    bool restarts_enabled = true;
    double restart_multiplier = 2.0;
    double initial_limit_factor = 2.0;

    std::optional<std::uint64_t> node_limit;  // across all attempts
    std::optional<double> time_limit_seconds;
    InSearchChecks checks;
    std::optional<int> start_vertex;  // unset: random, re-rolled per attempt
    std::uint64_t seed = 0;
};

// Where the final answer was established.
enum class SolvePhase { InitialPrune, Search, Exhausted, LimitHit };
std::string_view to_string(SolvePhase p);

struct SearchStats {
    std::uint64_t nodes = 0;  // extend() invocations, root included
    int restarts = 0;         // attempts beyond the first
    std::vector<std::uint64_t> attempt_nodes;
    std::vector<std::uint64_t> attempt_limits;  // 0 = unbounded attempt
    double wall_ms = 0.0;
    SolvePhase phase = SolvePhase::InitialPrune;
};

struct SolveOutcome {
    enum class Kind { Hamiltonian, NonHamiltonian, Timeout };
    Kind kind = Kind::Timeout;
    std::vector<int> cycle;  // Hamiltonian only: n distinct vertices, in order
    NonHamReason reason = NonHamReason::Exhausted;  // NonHamiltonian only
};
std::string_view to_string(SolveOutcome::Kind k);  // HC / NONHAM / TIMEOUT

struct SolveResult {
    SolveOutcome outcome;
    SearchStats stats;
};

// Exact decision procedure.  The input graph is never modified (the solver
// works on a copy).  One search node = one vertex placement, so an instance
// solved without backtracking costs exactly n nodes; instances rejected by
// the initial reduction cost zero.
SolveResult solve(const Graph& g, const SearchConfig& cfg = {});

// True iff `cycle` lists each vertex of g exactly once and consecutive
// vertices (wrapping around) are adjacent in g.
bool verify_cycle(const Graph& g, const std::vector<int>& cycle);

// Candidate ordering used at each search node: ascending current degree
// (ties by vertex id), descending (ties by id), or a seeded uniform shuffle.
std::vector<int> order_neighbors(const Graph& g, const std::vector<int>& candidates,
                                 Heuristic h, Rng& rng);

// Independent reference decision procedure for n <= 12: fixes vertex 0 and
// tries every permutation of the rest.  Shares no logic with solve().
SolveOutcome brute_force_oracle(const Graph& g);

// Node-count hardness classes, relative to the n^2 threshold.
enum class Hardness { Easy, QuadraticallyHard };
std::string_view to_string(Hardness h);  // "easy" / "quadratic"
Hardness classify_hardness(const SearchStats& stats, int n);
// The "robust" qualifier applies under the doubling restart schedule, which
// overshoots the minimal sufficient budget by at most a factor of four.
bool robust_hardness_qualifier(const SearchConfig& cfg);

}  // namespace hamlab
