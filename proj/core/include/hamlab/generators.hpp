#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/rng.hpp"

namespace hamlab {

// Uniform over all m-subsets of vertex pairs: pairs are sampled and rejected
// until m distinct edges are placed.
Graph gen_gnm(int n, long m, Rng& rng);

// Degree parameterization of the edge count: m = k * (ln n + ln ln n) * n/2,
// rounded half-up and clamped to [0, n(n-1)/2].  k = 1 sits at the expected
// threshold where minimum degree 2 becomes likely.
long degree_param_to_m(int n, double k);

// Random distinct edges added one at a time until minimum degree reaches 2;
// the construction stops immediately, so removing the last-added edge always
// drops some vertex below degree 2.
Graph gen_gnstar(int n, Rng& rng, Edge* last_edge = nullptr);

// Random graph with an (almost) fixed degree sequence: round_half_up(p3 * n)
// vertices of degree 3, the rest degree 2; an odd degree total is repaired by
// incrementing one minimum-degree vertex.  Two stub-matching variants:
//
//   version 1: an array holds each unsaturated vertex once; random pairs are
//     drawn until few vertices remain, then all remaining pairs are tried in
//     random order.  Unfillable valences discard the attempt.
//   version 2: the array holds each vertex once per unit of free valence;
//     random entry pairs are drawn, 100 consecutive rejections discard the
//     attempt.
//
// Both retry from scratch on failure, up to 1000 attempts.
Graph gen_degreebound(int n, double p3, int version, Rng& rng);

// The general-degree-sequence core of gen_degreebound, exposed so the two
// variants' sampling behavior can be probed on arbitrary target sequences.
Graph gen_from_degree_sequence(const std::vector<int>& target, int version, Rng& rng);

// Generalized knight's move graph on a rows x cols board: cell (r, c) has id
// r * cols + c, and two cells are adjacent iff their coordinate deltas are
// {a, b} as a multiset.  Deterministic.
Graph gen_knight(int a, int b, int rows, int cols);

// Interconnected-cutset construction: k_sub copies of a gadget on 2s + 2
// vertices, chained by degree-2 connectors, plus random edges between the
// "plain" vertices of different subgraphs.  Built to carry a known
// Hamiltonian cycle while the degree structure baits degree-guided search
// into an exponential trap.
struct IccsSubgraph {
    std::vector<int> inner;  // i_1..i_s
    std::vector<int> plain;  // c_1..c_{s-2}, complete-bipartite to inner
    int t1 = 0, t2 = 0;      // transfer vertices, degree 3
    int decoy = 0;           // degree 4, adjacent to t1, t2, i_2, i_{s-1}
    int connector = 0;       // degree 2, joins t2 to the next subgraph's t1
};

struct IccsLayout {
    int k_sub = 0, s = 0;
    std::vector<IccsSubgraph> subgraphs;
    std::vector<int> intended_cycle;  // a Hamiltonian cycle by construction
};

Graph gen_iccs(int k_sub, int s, Rng& rng, IccsLayout* layout = nullptr);

// Mean-degree interval implied by the ICCS edge budget for subgraph size s
// (interconnect endpoints may coincide, hence a range), independent of k_sub.
std::pair<double, double> iccs_mean_degree_bounds(int s);

}  // namespace hamlab
