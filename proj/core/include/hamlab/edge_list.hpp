#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hamlab/graph.hpp"

namespace hamlab {

// Plain-text instance format:
//
//   # optional comment lines (the generator writes "# spec=<...>")
//   n m
//   u v        (m lines, 0 <= u < v < n, ASCII decimal, LF)
//
// The reader skips '#' lines and blank lines anywhere and rejects self-loops,
// reversed or duplicate edges, out-of-range ids, and count mismatches.
// Errors carry 1-based line numbers.
struct EdgeListError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the canonical form: optional "# spec=..." comment, header, edges
// sorted by (u, v).
void write_edge_list(std::ostream& out, const Graph& g, const std::string& spec_comment = "");
void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::string& spec_comment = "");

}  // namespace hamlab
