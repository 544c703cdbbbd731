#pragma once

#include <string_view>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// Why an instance (or search branch) was ruled out.  Exhausted is produced by
// the solver when the whole search space is explored without success.
enum class NonHamReason {
    MinDegree,        // some vertex has fewer than two usable edges
    TriForced,        // three forced edges meet at one vertex
    Disconnected,     // more than one component
    CutPoint,         // an articulation point
    OddForcedDegree,  // parity certificate (see forced_degree_parity_test)
    Exhausted,        // search space exhausted
};
std::string_view to_string(NonHamReason r);

enum class PruneStatus { Reduced, NonHamiltonian };

struct PruneOutcome {
    PruneStatus status = PruneStatus::Reduced;
    int deleted = 0;                              // edges removed (journaled)
    NonHamReason reason = NonHamReason::MinDegree;  // valid iff NonHamiltonian
};

// Iterates two reductions to a fixpoint, journaling every deletion:
//
//   Rule A: a vertex with two degree-2 neighbors keeps only those two edges
//           (both are forced); three or more degree-2 neighbors is a
//           contradiction (TriForced).
//   Rule B: a maximal path whose interior vertices all have degree 2 must
//           appear contiguously in any Hamiltonian cycle, so the chord
//           joining its endpoints is deleted - unless the path already spans
//           all n vertices, in which case that closing edge is exactly the
//           cycle candidate and is preserved.  A chain closing on a single
//           junction vertex is a forced short cycle that strands its
//           vertices (reported as MinDegree); a pure degree-2 cycle is its
//           own component and is left for the connectivity check.
//
// After every pass, any vertex of degree < 2 proves non-Hamiltonicity.
// Every deleted edge provably lies outside all Hamiltonian cycles of the
// input, so the reduction is exact.
PruneOutcome prune_fixpoint(Graph& g, DeletionJournal& journal);

// Front door used once per solve, before any search: prune to fixpoint, then
// check min degree >= 2, connectivity, and absence of cut vertices, in that
// order.  Consumes zero search nodes.
PruneOutcome initial_check(Graph& g, DeletionJournal& journal);

// Edges forced by degree (incident on a degree-2 vertex), sorted, deduped.
std::vector<Edge> forced_edges(const Graph& g);

// Parity certificate: remove all forced edges F from G; every component of
// G - F must absorb an even number of forced-edge endpoints, because a
// Hamiltonian cycle enters and leaves the component through them in pairs
// (an F-edge internal to the component contributes both endpoints).  An odd
// component proves non-Hamiltonicity in O(n + m), no search.
struct ParityResult {
    bool non_hamiltonian = false;
    std::vector<int> component;  // witness component's vertices, sorted
    int forced_degree = 0;       // its (odd) forced-edge endpoint count
};
ParityResult forced_degree_parity_test(const Graph& g);

// Exhaustive scan over vertex subsets S with 1 <= |S| <= max_cutset_size (at
// most 3): if G - S splits into more than |S| components, no Hamiltonian
// cycle exists.
// Exponential in max_cutset_size; a diagnostic, not a solver step.
struct CutsetResult {
    bool non_hamiltonian = false;
    std::vector<int> cut;     // witness S, sorted
    int component_count = 0;  // components of G - S
};
CutsetResult small_cutset_scan(const Graph& g, int max_cutset_size);

}  // namespace hamlab
