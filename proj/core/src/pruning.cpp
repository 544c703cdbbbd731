#include "hamlab/pruning.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hamlab/graph_algo.hpp"

namespace hamlab {

std::string_view to_string(NonHamReason r) {
    switch (r) {
        case NonHamReason::MinDegree: return "MinDegree";
        case NonHamReason::TriForced: return "TriForced";
        case NonHamReason::Disconnected: return "Disconnected";
        case NonHamReason::CutPoint: return "CutPoint";
        case NonHamReason::OddForcedDegree: return "OddForcedDegree";
        case NonHamReason::Exhausted: return "Exhausted";
    }
    return "?";
}

namespace {

PruneOutcome non_ham(NonHamReason reason, int deleted) {
    return {PruneStatus::NonHamiltonian, deleted, reason};
}

// Rule A over all vertices; returns false via *contradiction on TriForced.
bool rule_a_pass(Graph& g, DeletionJournal& journal, int& deleted, bool& contradiction) {
    const int n = g.order();
    bool changed = false;
    std::vector<int> snapshot;
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) < 3) continue;  // nothing deletable, and TriForced needs >= 3 too
        int forced = 0;
        int a = -1, b = -1;
        for (int w : g.neighbors(x)) {
            if (g.degree(w) == 2) {
                ++forced;
                if (a == -1)
                    a = w;
                else if (b == -1)
                    b = w;
            }
        }
        if (forced >= 3) {
            contradiction = true;
            return changed;
        }
        if (forced == 2) {
            snapshot.assign(g.neighbors(x).begin(), g.neighbors(x).end());
            for (int w : snapshot) {
                if (w == a || w == b) continue;
                g.delete_edge(x, w, journal);
                ++deleted;
                changed = true;
            }
        }
    }
    return changed;
}

// Walks the maximal degree-2 chain from seed in one direction.
// Returns the terminal vertex (degree != 2), or seed itself if the walk
// loops (pure degree-2 cycle).  Interior vertices are appended to `seen`.
int walk_chain(const Graph& g, int seed, int first, std::vector<int>& seen) {
    int prev = seed;
    int cur = first;
    while (cur != seed && g.degree(cur) == 2) {
        seen.push_back(cur);
        const auto& nb = g.neighbors(cur);
        const int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// Rule B over all maximal forced paths.
bool rule_b_pass(Graph& g, DeletionJournal& journal, int& deleted, bool& contradiction) {
    const int n = g.order();
    bool changed = false;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<int> seen;
    for (int s = 0; s < n; ++s) {
        if (done[s] || g.degree(s) != 2) continue;
        seen.clear();
        seen.push_back(s);
        const auto& nb = g.neighbors(s);
        const int left = walk_chain(g, s, nb[0], seen);
        if (left == s) {
            // Pure degree-2 cycle: no endpoints, so no chord to delete.  A
            // short one is necessarily a whole component, which the
            // connectivity check reports as Disconnected — the truthful
            // certificate — so no contradiction is raised here.
            for (int v : seen) done[v] = 1;
            continue;
        }
        const int right = walk_chain(g, s, nb[1], seen);
        for (int v : seen) done[v] = 1;
        if (left == right) {
            // Closed loop of forced edges through one junction vertex; the
            // cycle it forces cannot cover all n (the junction would need
            // degree 2 as well), so the instance is dead.
            contradiction = true;
            return changed;
        }
        const int k = static_cast<int>(seen.size()) + 2;  // path vertices incl. endpoints
        if (k < n && g.has_edge(left, right)) {
            g.delete_edge(left, right, journal);
            ++deleted;
            changed = true;
        }
    }
    return changed;
}

bool min_degree_ok(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < 2) return false;
    return true;
}

}  // namespace

PruneOutcome prune_fixpoint(Graph& g, DeletionJournal& journal) {
    const int n = g.order();
    int deleted = 0;
    int productive = 0;
    for (;;) {
        bool contradiction = false;
        bool changed = rule_a_pass(g, journal, deleted, contradiction);
        if (contradiction) return non_ham(NonHamReason::TriForced, deleted);
        changed = rule_b_pass(g, journal, deleted, contradiction) || changed;
        if (contradiction) return non_ham(NonHamReason::MinDegree, deleted);
        if (!min_degree_ok(g)) return non_ham(NonHamReason::MinDegree, deleted);
        if (!changed) break;
        // Each pass beyond the first needs a freshly created degree-2 vertex,
        // and a vertex drops to degree 2 at most once.
        ++productive;
        assert(productive <= n && "prune fixpoint failed to converge");
    }
    return {PruneStatus::Reduced, deleted, NonHamReason::MinDegree};
}

PruneOutcome initial_check(Graph& g, DeletionJournal& journal) {
    PruneOutcome out = prune_fixpoint(g, journal);
    if (out.status == PruneStatus::NonHamiltonian) return out;
    if (!min_degree_ok(g)) return non_ham(NonHamReason::MinDegree, out.deleted);
    if (!is_connected(g)) return non_ham(NonHamReason::Disconnected, out.deleted);
    if (has_articulation_point(g)) return non_ham(NonHamReason::CutPoint, out.deleted);
    return out;
}

std::vector<Edge> forced_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v && (g.degree(u) == 2 || g.degree(v) == 2)) out.emplace_back(u, v);
        }
    }
    return out;
}

ParityResult forced_degree_parity_test(const Graph& g) {
    const int n = g.order();
    const auto in_f = [&g](int u, int v) { return g.degree(u) == 2 || g.degree(v) == 2; };

    // Components of G - F, without materializing the subtraction.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = comp_count;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[w] == -1 && !in_f(v, w)) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
            }
        }
        ++comp_count;
    }

    std::vector<int> fdeg(static_cast<std::size_t>(comp_count), 0);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v && in_f(u, v)) {
                ++fdeg[comp[u]];
                ++fdeg[comp[v]];  // an internal F-edge counts twice, as required
            }
        }
    }

    for (int c = 0; c < comp_count; ++c) {
        if (fdeg[c] % 2 == 0) continue;
        ParityResult res;
        res.non_hamiltonian = true;
        res.forced_degree = fdeg[c];
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) res.component.push_back(v);
        return res;
    }
    return {};
}

namespace {

int components_without(const Graph& g, const std::vector<int>& removed, std::vector<int>& scratch) {
    const int n = g.order();
    scratch.assign(static_cast<std::size_t>(n), 0);  // 0 unvisited, 1 removed, 2 seen
    for (int v : removed) scratch[v] = 1;
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (scratch[s] != 0) continue;
        ++count;
        scratch[s] = 2;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (scratch[w] == 0) {
                    scratch[w] = 2;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

}  // namespace

CutsetResult small_cutset_scan(const Graph& g, int max_cutset_size) {
    if (max_cutset_size < 1 || max_cutset_size > 3)
        throw std::invalid_argument("max_cutset_size must be 1, 2, or 3");
    const int n = g.order();
    std::vector<int> scratch;
    std::vector<int> subset;
    // Sizes ascending, subsets lexicographic: the reported witness is the
    // first (smallest, lowest-numbered) cut found.
    for (int size = 1; size <= std::min(max_cutset_size, n - 1); ++size) {
        subset.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) subset[i] = i;
        for (;;) {
            const int parts = components_without(g, subset, scratch);
            if (parts > size) {
                return {true, subset, parts};
            }
            // next lexicographic size-subset of {0..n-1}
            int i = size - 1;
            while (i >= 0 && subset[i] == n - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return {};
}

}  // namespace hamlab
