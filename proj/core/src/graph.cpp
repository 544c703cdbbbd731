#include "hamlab/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hamlab {

Graph::Graph(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("graph order must be positive");
    adj_.resize(static_cast<std::size_t>(n));
}

int Graph::check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    return v;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    if (has_edge(u, v)) return false;
    insert_arc(u, v);
    insert_arc(v, u);
    ++m_;
    return true;
}

void Graph::delete_edge(int u, int v, DeletionJournal& journal) {
    assert(has_edge(u, v) && "deleting a nonexistent edge");
    remove_arc(u, v);
    remove_arc(v, u);
    --m_;
    journal.record(std::min(u, v), std::max(u, v));
}

void Graph::insert_arc(int from, int to) {
    auto& a = adj_[from];
    a.insert(std::lower_bound(a.begin(), a.end(), to), to);
}

void Graph::remove_arc(int from, int to) {
    auto& a = adj_[from];
    const auto it = std::lower_bound(a.begin(), a.end(), to);
    assert(it != a.end() && *it == to);
    a.erase(it);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::check_consistent() const {
    long arcs = 0;
    for (int u = 0; u < n_; ++u) {
        const auto& a = adj_[u];
        if (!std::is_sorted(a.begin(), a.end())) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
        for (int v : a) {
            if (v < 0 || v >= n_ || v == u) return false;
            if (!has_edge(v, u)) return false;
        }
        arcs += static_cast<long>(a.size());
    }
    return arcs == 2 * m_;
}

DeletionJournal::Mark DeletionJournal::open_mark() {
    marks_.push_back(deleted_.size());
    return marks_.size() - 1;
}

void DeletionJournal::restore(Graph& g, Mark mark) {
    assert(!marks_.empty() && mark == marks_.size() - 1 && "marks restore in LIFO order");
    const std::size_t floor = marks_[mark];
    while (deleted_.size() > floor) {
        const auto [u, v] = deleted_.back();
        deleted_.pop_back();
        g.insert_arc(u, v);
        g.insert_arc(v, u);
        ++g.m_;
    }
    marks_.pop_back();
}

}  // namespace hamlab
