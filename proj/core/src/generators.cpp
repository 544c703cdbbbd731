#include "hamlab/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace hamlab {

namespace {

long max_edges(int n) { return static_cast<long>(n) * (n - 1) / 2; }

long round_half_up(double x) { return std::llround(std::floor(x + 0.5)); }

}  // namespace

Graph gen_gnm(int n, long m, Rng& rng) {
    if (n <= 0) throw std::invalid_argument("gen_gnm: n must be positive");
    if (m < 0 || m > max_edges(n))
        throw std::invalid_argument("gen_gnm: m out of range");
    Graph g(n);
    while (g.edge_count() < m) {
        int u = uniform_int_below(rng, n);
        int v = uniform_int_below(rng, n);
        if (u == v) continue;
        g.add_edge(u, v);  // duplicate draws are simply rejected
    }
    return g;
}

long degree_param_to_m(int n, double k) {
    if (n < 3) throw std::invalid_argument("degree_param_to_m: n must be >= 3");
    if (!(k > 0.0)) throw std::invalid_argument("degree_param_to_m: k must be positive");
    const double target = k * (std::log(n) + std::log(std::log(n))) * n / 2.0;
    return std::clamp(round_half_up(target), 0L, max_edges(n));
}

Graph gen_gnstar(int n, Rng& rng, Edge* last_edge) {
    if (n < 3) throw std::invalid_argument("gen_gnstar: n must be >= 3");
    Graph g(n);
    int below_two = n;  // vertices with degree < 2
    while (below_two > 0) {
        int u = uniform_int_below(rng, n);
        int v = uniform_int_below(rng, n);
        if (u == v) continue;
        int du = g.degree(u), dv = g.degree(v);
        if (!g.add_edge(u, v)) continue;
        if (du == 1) --below_two;
        if (dv == 1) --below_two;
        if (last_edge) *last_edge = {std::min(u, v), std::max(u, v)};
    }
    return g;
}

namespace {

// One matching attempt; nullopt means the attempt wedged and the caller
// should redraw from scratch.
std::optional<Graph> attempt_v1(const std::vector<int>& target, Rng& rng) {
    const int n = static_cast<int>(target.size());
    const int maxdeg = *std::max_element(target.begin(), target.end());
    Graph g(n);
    std::vector<int> remaining = target;
    std::vector<int> avail;       // vertices with remaining valence, each once
    std::vector<int> pos(n, -1);  // index of each such vertex in avail
    for (int v = 0; v < n; ++v)
        if (remaining[v] > 0) {
            pos[v] = static_cast<int>(avail.size());
            avail.push_back(v);
        }

    auto take = [&](int u, int v) {
        g.add_edge(u, v);
        for (int w : {u, v}) {
            if (--remaining[w] == 0) {
                int p = pos[w];
                avail[p] = avail.back();
                pos[avail[p]] = p;
                avail.pop_back();
                pos[w] = -1;
            }
        }
    };

    // Bulk phase: random pairs while plenty of vertices remain open.
    int stalls = 0;
    while (static_cast<int>(avail.size()) > 2 * maxdeg) {
        int i = uniform_int_below(rng, avail.size());
        int j = uniform_int_below(rng, avail.size() - 1);
        if (j >= i) ++j;
        int u = avail[i], v = avail[j];
        if (g.has_edge(u, v)) {
            if (++stalls == 1000) return std::nullopt;
            continue;
        }
        stalls = 0;
        take(u, v);
    }

    // Endgame: try every still-possible pair once, in random order.  Pairs
    // only become invalid (saturation, duplication) as edges are added, so a
    // single pass decides the attempt.
    std::vector<Edge> pairs;
    for (size_t i = 0; i < avail.size(); ++i)
        for (size_t j = i + 1; j < avail.size(); ++j) {
            int u = std::min(avail[i], avail[j]), v = std::max(avail[i], avail[j]);
            if (!g.has_edge(u, v)) pairs.push_back({u, v});
        }
    shuffle_vec(pairs, rng);
    for (auto [u, v] : pairs)
        if (remaining[u] > 0 && remaining[v] > 0 && !g.has_edge(u, v)) take(u, v);

    if (!avail.empty()) return std::nullopt;
    return g;
}

std::optional<Graph> attempt_v2(const std::vector<int>& target, Rng& rng) {
    const int n = static_cast<int>(target.size());
    Graph g(n);
    std::vector<int> stubs;  // vertex v appears once per unit of free valence
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < target[v]; ++c) stubs.push_back(v);

    int failures = 0;
    while (!stubs.empty()) {
        int i = uniform_int_below(rng, stubs.size());
        int j = uniform_int_below(rng, stubs.size() - 1);
        if (j >= i) ++j;
        int u = stubs[i], v = stubs[j];
        if (u == v || g.has_edge(u, v)) {
            if (++failures == 100) return std::nullopt;
            continue;
        }
        failures = 0;
        g.add_edge(u, v);
        if (i < j) std::swap(i, j);  // pop the higher index first
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
    }
    return g;
}

}  // namespace

Graph gen_from_degree_sequence(const std::vector<int>& target, int version, Rng& rng) {
    if (target.empty())
        throw std::invalid_argument("gen_from_degree_sequence: empty sequence");
    long total = 0;
    for (int d : target) {
        if (d < 0 || d >= static_cast<int>(target.size()))
            throw std::invalid_argument("gen_from_degree_sequence: degree out of range");
        total += d;
    }
    if (total % 2 != 0)
        throw std::invalid_argument("gen_from_degree_sequence: odd degree total");
    if (version != 1 && version != 2)
        throw std::invalid_argument("gen_from_degree_sequence: version must be 1 or 2");

    for (int tries = 0; tries < 1000; ++tries) {
        auto g = version == 1 ? attempt_v1(target, rng) : attempt_v2(target, rng);
        if (g) {
            for (size_t v = 0; v < target.size(); ++v)
                assert(g->degree(static_cast<int>(v)) == target[v]);
            return std::move(*g);
        }
    }
    throw std::runtime_error("gen_from_degree_sequence: no realization in 1000 attempts");
}

Graph gen_degreebound(int n, double p3, int version, Rng& rng) {
    if (n < 3) throw std::invalid_argument("gen_degreebound: n must be >= 3");
    if (!(p3 >= 0.0 && p3 <= 1.0))
        throw std::invalid_argument("gen_degreebound: p3 must be in [0, 1]");
    const int t3 = static_cast<int>(std::clamp(round_half_up(p3 * n), 0L, static_cast<long>(n)));
    std::vector<int> target(n, 2);
    for (int v = 0; v < t3; ++v) target[v] = 3;  // lowest ids carry degree 3
    if (t3 % 2 != 0) {
        // Repair parity by raising the lowest-numbered minimum-degree vertex.
        target[t3 < n ? t3 : 0] += 1;
    }
    return gen_from_degree_sequence(target, version, rng);
}

Graph gen_knight(int a, int b, int rows, int cols) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
        throw std::invalid_argument("gen_knight: moves must be >= 0 and not both 0");
    if (rows < 1 || cols < 1) throw std::invalid_argument("gen_knight: empty board");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> deltas = {{a, b}};
    if (a != b) deltas.push_back({b, a});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (auto [dr, dc] : deltas)
                for (int sr : {1, -1})
                    for (int sc : {1, -1}) {
                        int r2 = r + sr * dr, c2 = c + sc * dc;
                        if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) continue;
                        if (id(r, c) < id(r2, c2)) g.add_edge(id(r, c), id(r2, c2));
                    }
    return g;
}

Graph gen_iccs(int k_sub, int s, Rng& rng, IccsLayout* layout) {
    if (k_sub < 1) throw std::invalid_argument("gen_iccs: k_sub must be >= 1");
    // Below s = 6 the plain vertices are no longer the low-degree bait the
    // construction is built around, so smaller gadgets are rejected.
    if (s < 6) throw std::invalid_argument("gen_iccs: s must be >= 6");
    const int block = 2 * s + 2;
    Graph g(k_sub * block);

    std::vector<IccsSubgraph> subs(k_sub);
    for (int j = 0; j < k_sub; ++j) {
        const int base = j * block;
        IccsSubgraph& sg = subs[j];
        for (int x = 0; x < s; ++x) sg.inner.push_back(base + x);
        sg.t1 = base + s;
        sg.t2 = base + s + 1;
        sg.decoy = base + s + 2;
        for (int x = 0; x < s - 2; ++x) sg.plain.push_back(base + s + 3 + x);
        sg.connector = base + 2 * s + 1;

        g.add_edge(sg.t1, sg.inner.front());
        g.add_edge(sg.t2, sg.inner.back());
        g.add_edge(sg.decoy, sg.t1);
        g.add_edge(sg.decoy, sg.t2);
        g.add_edge(sg.decoy, sg.inner[1]);
        g.add_edge(sg.decoy, sg.inner[s - 2]);
        for (int c : sg.plain)
            for (int i : sg.inner) g.add_edge(c, i);
        g.add_edge(sg.t2, sg.connector);
    }
    for (int j = 0; j < k_sub; ++j)
        g.add_edge(subs[j].connector, subs[(j + 1) % k_sub].t1);

    // Interconnect: every plain vertex draws one partner plain from a
    // different subgraph; a redrawn pair is skipped, not resampled.
    if (k_sub >= 2) {
        for (int j = 0; j < k_sub; ++j)
            for (int c : subs[j].plain) {
                int t = uniform_int_below(rng, k_sub - 1);
                if (t >= j) ++t;
                int partner = subs[t].plain[uniform_int_below(rng, s - 2)];
                g.add_edge(c, partner);
            }
    }

    if (layout) {
        layout->k_sub = k_sub;
        layout->s = s;
        layout->subgraphs = subs;
        layout->intended_cycle.clear();
        for (const IccsSubgraph& sg : subs) {
            auto& cyc = layout->intended_cycle;
            cyc.push_back(sg.t1);
            cyc.push_back(sg.inner[0]);
            cyc.push_back(sg.plain[0]);
            cyc.push_back(sg.inner[1]);
            cyc.push_back(sg.decoy);
            cyc.push_back(sg.inner[s - 2]);
            for (int t = 2; t <= s - 3; ++t) {
                cyc.push_back(sg.plain[t - 1]);
                cyc.push_back(sg.inner[t]);
            }
            cyc.push_back(sg.plain[s - 3]);
            cyc.push_back(sg.inner[s - 1]);
            cyc.push_back(sg.t2);
            cyc.push_back(sg.connector);
        }
    }
    return g;
}

std::pair<double, double> iccs_mean_degree_bounds(int s) {
    if (s < 6) throw std::invalid_argument("iccs_mean_degree_bounds: s must be >= 6");
    // Block edges: 2 transfer + 4 decoy + s(s-2) bipartite + 2 connector;
    // interconnect adds between (s-2)/2 (all picks paired up) and s-2 edges
    // per subgraph.  Mean degree 2m/n with n = 2s + 2 per subgraph.
    const double lo = (2.0 * s * s - 3.0 * s + 14.0) / (2.0 * s + 2.0);
    const double hi = (1.0 * s * s - s + 6.0) / (s + 1.0);
    return {lo, hi};
}

}  // namespace hamlab
