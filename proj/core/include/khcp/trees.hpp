#pragma once

#include "khcp/graph.hpp"
#include "khcp/walk.hpp"

namespace khcp {

struct TreeSolution {
    Walk walk;
    UnboundedAssignment unbounded;
};

/// Optimal cycle walk for a tree: every internal vertex must repeat, so the
/// unbounded set is exactly the non-leaves and the walk is an Euler tour with
/// the final return to the root dropped. O(n). Throws std::invalid_argument
/// if the input is not a tree.
TreeSolution tree_cycle(const Graph& tree);

/// Optimal path walk for a tree. A linear DP finds the path through the tree
/// maximizing the number of degree <= 2 vertices on it; those vertices and
/// all leaves stay bounded, everything else is unbounded. The walk starts at
/// one end of the chosen path and detours through off-path subtrees along the
/// way. O(n). Throws std::invalid_argument if the input is not a tree.
TreeSolution tree_path(const Graph& tree);

} // namespace khcp
