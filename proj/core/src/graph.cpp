#include "khcp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace khcp {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge in edge list");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.matrix_.assign(static_cast<size_t>(n) * n, false);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.matrix_[static_cast<size_t>(u) * n + v] = true;
        g.matrix_[static_cast<size_t>(v) * n + u] = true;
    }
    // Adjacency comes out sorted already because the edge list is sorted,
    // except for the reverse direction entries; sort to be safe.
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

} // namespace khcp
