#pragma once

#include <vector>

#include "khcp/graph.hpp"

namespace khcp {

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Cut vertices (articulation points) in ascending order, found with a single
/// iterative DFS over discovery/low links. Throws std::invalid_argument if
/// the graph is disconnected.
std::vector<Vertex> cut_vertices(const Graph& g);

} // namespace khcp
