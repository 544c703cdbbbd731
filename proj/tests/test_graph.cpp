#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "hamlab/edge_list.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/graph_algo.hpp"
#include "test_util.hpp"

using namespace hamlab;
using namespace hamlab::test;

namespace {

// Union-find component counter: an oracle sharing no code with components().
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int components_oracle(const Graph& g) {
    UnionFind uf(g.order());
    for (auto [u, v] : g.edges()) uf.unite(u, v);
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (uf.find(v) == v) ++count;
    return count;
}

// Articulation oracle: v is a cut vertex iff deleting it increases the
// component count (not counting v itself).
std::vector<int> articulation_oracle(const Graph& g) {
    const int n = g.order();
    const int base = components_oracle(g);
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v) {
        UnionFind uf(n);
        for (auto [a, b] : g.edges())
            if (a != v && b != v) uf.unite(a, b);
        int count = 0;
        for (int w = 0; w < n; ++w)
            if (w != v && uf.find(w) == w) ++count;
        if (count > base) cuts.push_back(v);
    }
    return cuts;
}

}  // namespace

TEST_CASE("graph construction and queries") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    CHECK(g.add_edge(2, 0));
    CHECK(g.add_edge(0, 1));
    CHECK(g.add_edge(3, 2));
    CHECK_FALSE(g.add_edge(0, 2));  // duplicate, either orientation
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
    CHECK(g.neighbors(2) == std::vector<int>{0, 3});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.check_consistent());

    CHECK_THROWS(Graph(0));
    CHECK_THROWS(Graph(-3));
    CHECK_THROWS(g.add_edge(1, 1));
    CHECK_THROWS(g.add_edge(0, 4));
    CHECK_THROWS(g.add_edge(-1, 2));
}

TEST_CASE("journal restores nested marks exactly") {
    Rng rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + uniform_int_below(rng, 11);
        const long max_m = static_cast<long>(n) * (n - 1) / 2;
        Graph g = random_graph(n, uniform_below(rng, max_m + 1), rng);

        DeletionJournal journal;
        std::vector<Graph> snapshots;
        std::vector<DeletionJournal::Mark> marks;
        for (int depth = 0; depth < 4; ++depth) {
            snapshots.push_back(g);
            marks.push_back(journal.open_mark());
            auto edges = g.edges();
            shuffle_vec(edges, rng);
            const std::size_t kill = uniform_below(rng, edges.size() + 1);
            for (std::size_t i = 0; i < kill; ++i)
                g.delete_edge(edges[i].first, edges[i].second, journal);
            CHECK(g.check_consistent());
        }
        CHECK(journal.open_marks() == 4);
        while (!marks.empty()) {
            journal.restore(g, marks.back());
            CHECK(g == snapshots.back());
            CHECK(g.check_consistent());
            marks.pop_back();
            snapshots.pop_back();
        }
        CHECK(journal.open_marks() == 0);
        CHECK(journal.deleted_count() == 0);
    }
}

TEST_CASE("journal deleted_count tracks live deletions") {
    Graph g = complete_graph(5);
    DeletionJournal journal;
    auto mark = journal.open_mark();
    g.delete_edge(0, 1, journal);
    g.delete_edge(2, 3, journal);
    CHECK(journal.deleted_count() == 2);
    journal.restore(g, mark);
    CHECK(journal.deleted_count() == 0);
    CHECK(g == complete_graph(5));
}

TEST_CASE("components: known graphs") {
    Graph isolated(5);
    CHECK(components(isolated).count == 5);
    CHECK(is_connected(cycle_graph(6)));

    Graph two_triangles(6);
    for (int b : {0, 3}) {
        two_triangles.add_edge(b, b + 1);
        two_triangles.add_edge(b + 1, b + 2);
        two_triangles.add_edge(b, b + 2);
    }
    const Components c = components(two_triangles);
    CHECK(c.count == 2);
    CHECK(c.id == std::vector<int>{0, 0, 0, 1, 1, 1});
    CHECK_FALSE(is_connected(two_triangles));
}

TEST_CASE("components match union-find oracle") {
    Rng rng(777);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + uniform_int_below(rng, 15);
        const long max_m = static_cast<long>(n) * (n - 1) / 2;
        Graph g = random_graph(n, uniform_below(rng, max_m + 1), rng);
        CHECK(components(g).count == components_oracle(g));
    }
}

TEST_CASE("articulation points: known graphs") {
    Graph path(5);
    for (int v = 0; v + 1 < 5; ++v) path.add_edge(v, v + 1);
    CHECK(articulation_points(path) == std::vector<int>{1, 2, 3});
    CHECK(has_articulation_point(path));

    CHECK(articulation_points(cycle_graph(5)).empty());
    CHECK_FALSE(has_articulation_point(cycle_graph(5)));

    Graph star(5);
    for (int v = 1; v < 5; ++v) star.add_edge(0, v);
    CHECK(articulation_points(star) == std::vector<int>{0});

    // Two triangles glued at vertex 2.
    Graph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(2, 4);
    CHECK(articulation_points(bowtie) == std::vector<int>{2});
}

TEST_CASE("articulation points match removal oracle") {
    Rng rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + uniform_int_below(rng, 11);
        const long max_m = static_cast<long>(n) * (n - 1) / 2;
        Graph g = random_graph(n, uniform_below(rng, max_m + 1), rng);
        CHECK(articulation_points(g) == articulation_oracle(g));
        CHECK(has_articulation_point(g) == !articulation_oracle(g).empty());
    }
}

TEST_CASE("edge list round-trips") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + uniform_int_below(rng, 12);
        const long max_m = static_cast<long>(n) * (n - 1) / 2;
        Graph g = random_graph(n, uniform_below(rng, max_m + 1), rng);
        std::ostringstream out;
        write_edge_list(out, g, trial % 2 ? "test comment" : "");
        std::istringstream in(out.str());
        CHECK(read_edge_list(in) == g);
    }
}

TEST_CASE("edge list accepts comments, blanks, and CRLF") {
    std::istringstream in("# spec=whatever\n\n3 2\r\n0 1\n# middle\n1 2\n\n");
    Graph g = read_edge_list(in);
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("edge list rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), EdgeListError);
    };
    reject("");                      // empty
    reject("# only a comment\n");    // no header
    reject("3\n");                   // header missing m
    reject("0 0\n");                 // n = 0
    reject("3 -1\n");                // negative m
    reject("3 1\n1 1\n");            // self-loop
    reject("3 1\n2 1\n");            // reversed (u > v)
    reject("3 2\n0 1\n0 1\n");       // duplicate
    reject("3 1\n0 3\n");            // out of range
    reject("3 1\n-1 2\n");           // negative id
    reject("3 2\n0 1\n");            // fewer edges than declared
    reject("3 1\n0 1\n1 2\n");       // more edges than declared
    reject("3 1\n0 1 junk\n");       // trailing tokens
    reject("x y\n");                 // non-numeric header

    // Errors carry 1-based line numbers (comments count as lines).
    std::istringstream in("# c\n3 1\n2 1\n");
    try {
        read_edge_list(in);
        CHECK(false);
    } catch (const EdgeListError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}
