#include "hamlab/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hamlab/graph_algo.hpp"

namespace hamlab {

std::string_view to_string(Heuristic h) {
    switch (h) {
        case Heuristic::LowDegreeFirst: return "low";
        case Heuristic::HighDegreeFirst: return "high";
        case Heuristic::RandomOrder: return "random";
    }
    return "?";
}

std::string_view to_string(SolvePhase p) {
    switch (p) {
        case SolvePhase::InitialPrune: return "InitialPrune";
        case SolvePhase::Search: return "Search";
        case SolvePhase::Exhausted: return "Exhausted";
        case SolvePhase::LimitHit: return "LimitHit";
    }
    return "?";
}

std::string_view to_string(SolveOutcome::Kind k) {
    switch (k) {
        case SolveOutcome::Kind::Hamiltonian: return "HC";
        case SolveOutcome::Kind::NonHamiltonian: return "NONHAM";
        case SolveOutcome::Kind::Timeout: return "TIMEOUT";
    }
    return "?";
}

std::string_view to_string(Hardness h) {
    return h == Hardness::Easy ? "easy" : "quadratic";
}

std::vector<int> order_neighbors(const Graph& g, const std::vector<int>& candidates,
                                 Heuristic h, Rng& rng) {
    std::vector<int> out = candidates;
    switch (h) {
        case Heuristic::LowDegreeFirst:
            std::stable_sort(out.begin(), out.end(), [&g](int a, int b) {
                return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
            });
            break;
        case Heuristic::HighDegreeFirst:
            std::stable_sort(out.begin(), out.end(), [&g](int a, int b) {
                return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
            });
            break;
        case Heuristic::RandomOrder:
            shuffle_vec(out, rng);
            break;
    }
    return out;
}

bool verify_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.order();
    if (static_cast<int>(cycle.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    }
    return true;
}

SolveOutcome brute_force_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw std::invalid_argument("brute_force_oracle: n must be <= 12");
    SolveOutcome out;
    if (n < 3) {
        out.kind = SolveOutcome::Kind::NonHamiltonian;
        out.reason = NonHamReason::Exhausted;
        return out;
    }
    std::vector<int> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) {
            out.kind = SolveOutcome::Kind::Hamiltonian;
            out.cycle.push_back(0);
            out.cycle.insert(out.cycle.end(), perm.begin(), perm.end());
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.kind = SolveOutcome::Kind::NonHamiltonian;
    out.reason = NonHamReason::Exhausted;
    return out;
}

Hardness classify_hardness(const SearchStats& stats, int n) {
    const auto threshold = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    return stats.nodes >= threshold ? Hardness::QuadraticallyHard : Hardness::Easy;
}

bool robust_hardness_qualifier(const SearchConfig& cfg) {
    return cfg.restarts_enabled && cfg.restart_multiplier == 2.0;
}

namespace {

using Clock = std::chrono::steady_clock;

enum class AttemptStatus { Found, Exhausted, BudgetExceeded };

struct Searcher {
    Graph& g;
    DeletionJournal& journal;
    const SearchConfig& cfg;
    Rng& rng;
    int n;
    int start = 0;

    std::uint64_t attempt_nodes = 0;
    std::uint64_t attempt_budget = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t total_nodes_before = 0;  // nodes spent in earlier attempts
    std::optional<std::uint64_t> global_node_limit;
    std::optional<Clock::time_point> deadline;
    bool global_limit_hit = false;

    std::vector<int> path;
    std::vector<char> in_path;
    std::vector<int> scratch_candidates;
    std::vector<int> found_cycle;  // captured at the moment of success

    // DFS scratch for the optional connectivity / cut-vertex checks.
    std::vector<int> tin, low, dfs_parent;

    explicit Searcher(Graph& graph, DeletionJournal& j, const SearchConfig& c, Rng& r)
        : g(graph), journal(j), cfg(c), rng(r), n(graph.order()) {
        path.reserve(static_cast<std::size_t>(n));
        in_path.assign(static_cast<std::size_t>(n), 0);
        tin.assign(static_cast<std::size_t>(n), -1);
        low.assign(static_cast<std::size_t>(n), 0);
    }

    AttemptStatus run(int start_vertex, std::uint64_t budget) {
        start = start_vertex;
        attempt_budget = budget;
        attempt_nodes = 0;
        path.clear();
        std::fill(in_path.begin(), in_path.end(), 0);
        path.push_back(start);
        in_path[start] = 1;
        const AttemptStatus r = extend();
        path.pop_back();
        in_path[start] = 0;
        assert(journal.open_marks() == 0 && "journal marks must unwind with the search");
        return r;
    }

    bool out_of_global_budget() {
        const std::uint64_t total = total_nodes_before + attempt_nodes;
        if (global_node_limit && total >= *global_node_limit) return true;
        if (deadline && (total & 1023) == 0 && Clock::now() >= *deadline) return true;
        return false;
    }

    // One invocation = one search node = one placed vertex (the path's last).
    AttemptStatus extend() {
        if (attempt_nodes == attempt_budget) return AttemptStatus::BudgetExceeded;
        ++attempt_nodes;
        if (out_of_global_budget()) {
            global_limit_hit = true;
            return AttemptStatus::BudgetExceeded;
        }

        const int k = static_cast<int>(path.size());
        const int v = path.back();

        bool marked = false;
        DeletionJournal::Mark mark{};
        if (k >= 3) {
            // The previous vertex u is now interior: its two cycle edges are
            // decided, every other edge at u is dead in this branch.  The
            // deletions feed the fixpoint pruner, whose Rule B then also
            // guards against premature cycle closure.
            mark = journal.open_mark();
            marked = true;
            const int u = path[k - 2];
            const int u_prev = path[k - 3];
            scratch_candidates.assign(g.neighbors(u).begin(), g.neighbors(u).end());
            for (int w : scratch_candidates) {
                if (w != u_prev && w != v) g.delete_edge(u, w, journal);
            }
            if (prune_fixpoint(g, journal).status == PruneStatus::NonHamiltonian)
                return backtrack(mark, AttemptStatus::Exhausted);
        }

        if (k == n) {
            if (g.has_edge(v, start)) {
                found_cycle = path;
                return backtrack_if(marked, mark, AttemptStatus::Found);
            }
            return backtrack_if(marked, mark, AttemptStatus::Exhausted);
        }

        if ((cfg.checks.components || cfg.checks.cutpoints) && k >= 3) {
            if (!remaining_graph_viable())
                return backtrack_if(marked, mark, AttemptStatus::Exhausted);
        }

        scratch_candidates.clear();
        for (int w : g.neighbors(v))
            if (!in_path[w]) scratch_candidates.push_back(w);
        const std::vector<int> ordered = order_neighbors(g, scratch_candidates, cfg.heuristic, rng);

        for (int w : ordered) {
            path.push_back(w);
            in_path[w] = 1;
            const AttemptStatus r = extend();
            path.pop_back();
            in_path[w] = 0;
            if (r != AttemptStatus::Exhausted) return backtrack_if(marked, mark, r);
        }
        return backtrack_if(marked, mark, AttemptStatus::Exhausted);
    }

    AttemptStatus backtrack(DeletionJournal::Mark mark, AttemptStatus r) {
        journal.restore(g, mark);
        return r;
    }
    AttemptStatus backtrack_if(bool marked, DeletionJournal::Mark mark, AttemptStatus r) {
        if (marked) journal.restore(g, mark);
        return r;
    }

    // Sound cutoffs: the remaining graph still has to carry a spanning cycle,
    // so it must be connected (and 2-connected) at every node.
    bool remaining_graph_viable() {
        std::fill(tin.begin(), tin.end(), -1);
        int timer = 0;
        bool has_cut = false;
        const int root = path.front();
        dfs_low(root, -1, timer, has_cut);
        if (cfg.checks.cutpoints && has_cut) return false;
        if (timer != n) return false;  // disconnected; fatal under either flag
        return true;
    }

    void dfs_low(int v, int parent, int& timer, bool& has_cut) {
        tin[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (tin[w] != -1) {
                low[v] = std::min(low[v], tin[w]);
            } else {
                ++children;
                dfs_low(w, v, timer, has_cut);
                low[v] = std::min(low[v], low[w]);
                if (parent != -1 && low[w] >= tin[v]) has_cut = true;
            }
        }
        if (parent == -1 && children >= 2) has_cut = true;
    }
};

std::uint64_t scaled_limit(double factor, std::uint64_t base) {
    const double x = factor * static_cast<double>(base);
    if (x >= 9e18) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::llround(x));
}

}  // namespace

SolveResult solve(const Graph& g, const SearchConfig& cfg) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("solve: need at least 3 vertices");
    if (cfg.restart_multiplier < 1.0 || cfg.initial_limit_factor < 1.0)
        throw std::invalid_argument("solve: restart factors must be >= 1");
    if (cfg.start_vertex && (*cfg.start_vertex < 0 || *cfg.start_vertex >= n))
        throw std::invalid_argument("solve: start vertex out of range");

    const auto t0 = Clock::now();
    SolveResult res;
    auto& stats = res.stats;
    const auto finish = [&](SolvePhase phase) {
        stats.phase = phase;
        stats.wall_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0)
                .count();
        return res;
    };

    Graph base = g;
    DeletionJournal initial_journal;
    const PruneOutcome initial = initial_check(base, initial_journal);
    if (initial.status == PruneStatus::NonHamiltonian) {
        res.outcome.kind = SolveOutcome::Kind::NonHamiltonian;
        res.outcome.reason = initial.reason;
        return finish(SolvePhase::InitialPrune);
    }

    Rng rng(cfg.seed);
    Graph work = base;
    DeletionJournal journal;
    Searcher searcher(work, journal, cfg, rng);
    if (cfg.node_limit) searcher.global_node_limit = *cfg.node_limit;
    if (cfg.time_limit_seconds)
        searcher.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*cfg.time_limit_seconds));

    std::uint64_t budget = cfg.restarts_enabled
                               ? scaled_limit(cfg.initial_limit_factor, static_cast<std::uint64_t>(n))
                               : std::numeric_limits<std::uint64_t>::max();

    for (;;) {
        const int start =
            cfg.start_vertex ? *cfg.start_vertex : uniform_int_below(rng, n);
        if (!stats.attempt_nodes.empty()) {
            work = base;  // fresh copy of the reduced graph for the new attempt
            journal = DeletionJournal();
            ++stats.restarts;
        }
        const AttemptStatus status = searcher.run(start, budget);
        stats.attempt_nodes.push_back(searcher.attempt_nodes);
        stats.attempt_limits.push_back(cfg.restarts_enabled ? budget : 0);
        stats.nodes += searcher.attempt_nodes;
        searcher.total_nodes_before = stats.nodes;

        switch (status) {
            case AttemptStatus::Found:
                res.outcome.kind = SolveOutcome::Kind::Hamiltonian;
                res.outcome.cycle = std::move(searcher.found_cycle);
                assert(verify_cycle(g, res.outcome.cycle));
                return finish(SolvePhase::Search);
            case AttemptStatus::Exhausted:
                res.outcome.kind = SolveOutcome::Kind::NonHamiltonian;
                res.outcome.reason = NonHamReason::Exhausted;
                return finish(SolvePhase::Search);
            case AttemptStatus::BudgetExceeded:
                if (searcher.global_limit_hit) {
                    res.outcome.kind = SolveOutcome::Kind::Timeout;
                    return finish(SolvePhase::LimitHit);
                }
                assert(cfg.restarts_enabled);
                budget = scaled_limit(cfg.restart_multiplier, budget);
                break;
        }
    }
}

}  // namespace hamlab
