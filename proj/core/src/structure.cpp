#include "khcp/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace khcp {

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::vector<Vertex> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_vertices: graph must be connected");
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);

    // Iterative DFS; frame = (vertex, index into its adjacency list).
    std::vector<std::pair<Vertex, size_t>> stack;
    int timer = 0;
    int root_children = 0;

    disc[0] = low[0] = timer++;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < g.neighbors(v).size()) {
            Vertex w = g.neighbors(v)[idx++];
            if (disc[w] < 0) {
                parent[w] = v;
                if (v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                Vertex p = stack.back().first;
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) is_cut[p] = 1;
            }
        }
    }
    if (root_children > 1) is_cut[0] = 1;

    std::vector<Vertex> result;
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) result.push_back(v);
    return result;
}

} // namespace khcp
