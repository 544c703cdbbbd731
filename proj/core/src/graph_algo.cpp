#include "hamlab/graph_algo.hpp"

#include <algorithm>

namespace hamlab {

Components components(const Graph& g) {
    const int n = g.order();
    Components out;
    out.id.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (out.id[s] != -1) continue;
        const int c = out.count++;
        out.id[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (out.id[w] == -1) {
                    out.id[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).count == 1; }

namespace {

// Hopcroft-Tarjan low-link DFS.  Recursive; path depth is bounded by n and
// every use in this project keeps n comfortably below stack limits.
struct CutFinder {
    const Graph& g;
    std::vector<int> tin, low;
    std::vector<char> is_cut;
    int timer = 0;
    bool early_exit;   // stop at the first cut vertex
    bool found = false;

    explicit CutFinder(const Graph& graph, bool stop_at_first)
        : g(graph),
          tin(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), 0),
          is_cut(static_cast<std::size_t>(graph.order()), 0),
          early_exit(stop_at_first) {}

    void dfs(int v, int parent) {
        const bool is_root = parent < 0;
        tin[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;  // parallel edges cannot occur
            if (tin[w] != -1) {
                low[v] = std::min(low[v], tin[w]);
            } else {
                ++children;
                dfs(w, v);
                if (found && early_exit) return;
                low[v] = std::min(low[v], low[w]);
                if (!is_root && low[w] >= tin[v]) mark(v);
            }
        }
        if (is_root && children >= 2) mark(v);  // root with >= 2 subtrees
    }

    void mark(int v) {
        is_cut[v] = 1;
        found = true;
    }

    void run() {
        for (int s = 0; s < g.order(); ++s) {
            if (tin[s] == -1) {
                dfs(s, -1);
                if (found && early_exit) return;
            }
        }
    }
};

}  // namespace

std::vector<int> articulation_points(const Graph& g) {
    CutFinder f(g, /*stop_at_first=*/false);
    f.run();
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (f.is_cut[v]) out.push_back(v);
    return out;
}

bool has_articulation_point(const Graph& g) {
    CutFinder f(g, /*stop_at_first=*/true);
    f.run();
    return f.found;
}

}  // namespace hamlab
