#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "khcp/graph.hpp"
#include "khcp/walk.hpp"

namespace khcp {

/// Hamiltonian-cycle encoding of a fixed unbounded assignment. Every vertex
/// allowed to repeat is expanded into a cycle of n interchangeable copies
/// (n = original vertex count, the most times any vertex is needed in a
/// normalized walk); each copy inherits all of the vertex's adjacencies.
/// The gadget graph has a Hamiltonian cycle exactly when the original graph
/// has a valid cycle walk whose repeats stay inside the assignment.
struct HcpInstance {
    Graph graph;
    std::vector<Vertex> origin;                // gadget node -> original vertex
    std::vector<std::vector<Vertex>> members;  // original vertex -> its gadget nodes
};

HcpInstance to_hcp_instance(const Graph& g, const UnboundedAssignment& unbounded);

/// Projects a Hamiltonian cycle of the gadget graph back onto the original
/// vertices: rotate the cycle to start on a gadget boundary, replace each
/// node by its origin, and collapse consecutive duplicates. Throws
/// std::invalid_argument unless `cycle` is a Hamiltonian cycle of inst.graph
/// (for two nodes, a single shared edge closes the cycle, matching the
/// two-vertex cycle walk convention).
Walk hcp_cycle_to_walk(const HcpInstance& inst, const std::vector<Vertex>& cycle);

/// Asymmetric-TSP encoding of walk minimization. Every original vertex
/// becomes a ladder of n columns with three nodes each (a over b over c).
/// A single visit can sweep the whole ladder upward for free; any further
/// visit forces the first one down through the unit-cost arc a_1 -> b_1, so
/// an optimal tour pays exactly one per repeated vertex and its weight equals
/// the minimal number of repeats over all cycle walks. Arcs absent from the
/// construction carry the sentinel weight n + 1, which exceeds any honest
/// tour weight.
struct AtspInstance {
    int original_n = 0;
    int node_count = 0;  // 3 * original_n * original_n
    int sentinel = 0;    // original_n + 1
    std::unordered_map<std::int64_t, int> arcs;  // key(from, to) -> weight

    std::int64_t key(int from, int to) const {
        return static_cast<std::int64_t>(from) * node_count + to;
    }
    int a_node(Vertex v, int column) const;  // column in [1, original_n]
    int b_node(Vertex v, int column) const;
    int c_node(Vertex v, int column) const;
    Vertex origin(int node) const { return node / (3 * original_n); }
    /// Arc weight, or the sentinel when the arc is absent (including i == j).
    int weight(int from, int to) const;
};

/// Requires n >= 2: a one-vertex graph has no arcs to close a tour with.
AtspInstance to_atsp_instance(const Graph& g);

/// TSPLIB rendering with EDGE_WEIGHT_FORMAT FULL_MATRIX.
std::string emit_tsplib_atsp(const AtspInstance& inst, const std::string& name);

/// Encodes a valid cycle walk of g (per-vertex multiplicity at most n; run
/// normalize_walk first if needed) as a tour whose weight equals the number
/// of repeated vertices in the walk. Throws std::invalid_argument on an
/// invalid or oversized walk.
std::vector<int> walk_to_atsp_tour(const Graph& g, const AtspInstance& inst, const Walk& walk);

/// Weight of a node tour including the closing arc; absent arcs count the
/// sentinel.
std::int64_t atsp_tour_weight(const AtspInstance& inst, const std::vector<int>& tour);

/// Projects a tour of the gadget digraph back to a cycle walk over original
/// vertices (rotate to a gadget boundary, take origins, collapse repeats).
/// Throws std::invalid_argument unless `tour` is a permutation of all gadget
/// nodes that uses only arcs of the construction.
Walk atsp_tour_to_walk(const AtspInstance& inst, const std::vector<int>& tour);

} // namespace khcp
