#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hamlab {

using Edge = std::pair<int, int>;  // normalized: first < second

class DeletionJournal;

// Simple undirected graph on vertices 0..n-1.  Adjacency lists are kept
// sorted ascending, which makes neighbor enumeration deterministic,
// edge queries O(log degree), and structural equality canonical.
// No self-loops, no parallel edges.
class Graph {
  public:
    explicit Graph(int n);

    int order() const { return n_; }
    long edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }

    bool has_edge(int u, int v) const;

    // Returns false (and does nothing) if the edge is already present.
    bool add_edge(int u, int v);

    // Journaled removal; the edge must exist.  Restoring the journal mark
    // re-adds edges in reverse deletion order, so the graph round-trips
    // bit-identically (sorted lists make the order immaterial anyway).
    void delete_edge(int u, int v, DeletionJournal& journal);

    std::vector<Edge> edges() const;  // sorted (u, v), u < v

    bool operator==(const Graph& other) const = default;

    // Full structural self-check (symmetry, sortedness, degree/m bookkeeping);
    // O(n + m), meant for tests.
    bool check_consistent() const;

  private:
    friend class DeletionJournal;
    int check(int v) const;
    void remove_arc(int from, int to);
    void insert_arc(int from, int to);

    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Stack of journaled edge deletions with nested marks.  Marks restore in
// LIFO order only; restore(mark) reinstates exactly the edges deleted since
// that mark was opened and leaves the graph bit-identical to its state at
// the mark.
class DeletionJournal {
  public:
    using Mark = std::size_t;

    Mark open_mark();
    void restore(Graph& g, Mark mark);

    std::size_t deleted_count() const { return deleted_.size(); }
    std::size_t open_marks() const { return marks_.size(); }

  private:
    friend class Graph;
    void record(int u, int v) { deleted_.emplace_back(u, v); }

    std::vector<Edge> deleted_;
    std::vector<std::size_t> marks_;
};

}  // namespace hamlab
