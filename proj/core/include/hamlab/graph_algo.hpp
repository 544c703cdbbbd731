#pragma once

#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// Component ids are assigned in order of lowest-numbered vertex, so they are
// stable for a fixed graph.
struct Components {
    int count = 0;
    std::vector<int> id;  // per vertex
};

Components components(const Graph& g);
bool is_connected(const Graph& g);

// Cut vertices (articulation points), sorted ascending.
std::vector<int> articulation_points(const Graph& g);
bool has_articulation_point(const Graph& g);

}  // namespace hamlab
