#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace khcp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored three ways: a canonical lexicographically sorted edge
/// list, sorted per-vertex adjacency lists, and a flat boolean adjacency
/// matrix for O(1) membership tests. No self loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Throws std::invalid_argument on
    /// out-of-range endpoints, self loops, or duplicate edges.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(Vertex u, Vertex v) const { return matrix_[static_cast<size_t>(u) * n_ + v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    /// Neighbors of v in ascending order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    /// Canonical edge list: each edge as (min,max), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<bool> matrix_;
};

} // namespace khcp
