#include "khcp/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace khcp {

HcpInstance to_hcp_instance(const Graph& g, const UnboundedAssignment& unbounded) {
    const int n = g.vertex_count();
    for (Vertex v : unbounded.members())
        if (v < 0 || v >= n)
            throw std::invalid_argument("to_hcp_instance: unbounded vertex out of range");

    std::vector<std::vector<Vertex>> members(n);
    std::vector<Vertex> origin;
    for (Vertex v = 0; v < n; ++v) {
        int copies = unbounded.contains(v) ? n : 1;
        for (int c = 0; c < copies; ++c) {
            members[v].push_back(static_cast<Vertex>(origin.size()));
            origin.push_back(v);
        }
    }

    std::set<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        edges.insert({std::min(a, b), std::max(a, b)});
    };
    for (Vertex v = 0; v < n; ++v) {
        const auto& cyc = members[v];
        if (cyc.size() >= 2)  // two copies collapse to a single edge
            for (size_t i = 0; i < cyc.size(); ++i)
                add(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    for (const auto& [u, v] : g.edges())
        for (Vertex a : members[u])
            for (Vertex b : members[v]) add(a, b);

    Graph gadget = Graph::from_edges(static_cast<int>(origin.size()),
                                     std::vector<Edge>(edges.begin(), edges.end()));
    return {std::move(gadget), std::move(origin), std::move(members)};
}

Walk hcp_cycle_to_walk(const HcpInstance& inst, const std::vector<Vertex>& cycle) {
    const int nn = inst.graph.vertex_count();
    if (static_cast<int>(cycle.size()) != nn)
        throw std::invalid_argument("hcp_cycle_to_walk: cycle must visit every gadget node once");
    std::vector<char> seen(nn, 0);
    for (Vertex x : cycle) {
        if (x < 0 || x >= nn || seen[x])
            throw std::invalid_argument("hcp_cycle_to_walk: not a permutation of the gadget nodes");
        seen[x] = 1;
    }
    for (size_t i = 0; i + 1 < cycle.size(); ++i)
        if (!inst.graph.has_edge(cycle[i], cycle[i + 1]))
            throw std::invalid_argument("hcp_cycle_to_walk: cycle uses a non-edge");
    if (nn >= 2 && !inst.graph.has_edge(cycle.back(), cycle.front()))
        throw std::invalid_argument("hcp_cycle_to_walk: cycle does not close on an edge");

    size_t start = 0;
    bool boundary = false;
    for (size_t i = 0; i < cycle.size() && !boundary; ++i) {
        size_t prev = (i + cycle.size() - 1) % cycle.size();
        if (inst.origin[cycle[prev]] != inst.origin[cycle[i]]) {
            start = i;
            boundary = true;
        }
    }
    if (!boundary)  // single-vertex original graph
        return Walk{{inst.origin[cycle[0]]}};

    std::vector<Vertex> out;
    for (size_t i = 0; i < cycle.size(); ++i) {
        Vertex v = inst.origin[cycle[(start + i) % cycle.size()]];
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return Walk{std::move(out)};
}

int AtspInstance::a_node(Vertex v, int column) const {
    return v * 3 * original_n + (column - 1);
}

int AtspInstance::b_node(Vertex v, int column) const {
    return v * 3 * original_n + original_n + (column - 1);
}

int AtspInstance::c_node(Vertex v, int column) const {
    return v * 3 * original_n + 2 * original_n + (column - 1);
}

int AtspInstance::weight(int from, int to) const {
    auto it = arcs.find(key(from, to));
    return it == arcs.end() ? sentinel : it->second;
}

AtspInstance to_atsp_instance(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("to_atsp_instance: need at least two vertices");
    AtspInstance inst;
    inst.original_n = n;
    inst.node_count = 3 * n * n;
    inst.sentinel = n + 1;

    auto add = [&](int f, int t, int w) { inst.arcs[inst.key(f, t)] = w; };
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 1; i <= n; ++i) {
            int a = inst.a_node(v, i);
            int b = inst.b_node(v, i);
            int c = inst.c_node(v, i);
            add(a, b, i == 1 ? 1 : 0);  // the single unit-cost arc of the ladder
            add(b, a, 0);
            add(b, c, 0);
            add(c, b, 0);
            if (i >= 2) {
                int cprev = inst.c_node(v, i - 1);
                add(a, cprev, 0);  // upward sweep crosses columns here
                add(cprev, a, 0);  // downward hand-off to the next column
            }
        }
    }
    // A gadget is left from c_i (after a partial descent) or from a_1 (after
    // a full upward sweep) and entered at a_j (descending visit j) or at c_n
    // (start of an upward sweep).
    for (const auto& [eu, ev] : g.edges()) {
        for (auto [from, to] : {std::pair<Vertex, Vertex>{eu, ev}, std::pair<Vertex, Vertex>{ev, eu}}) {
            std::vector<int> outs{inst.a_node(from, 1)};
            std::vector<int> ins{inst.c_node(to, n)};
            for (int i = 1; i <= n; ++i) {
                outs.push_back(inst.c_node(from, i));
                ins.push_back(inst.a_node(to, i));
            }
            for (int f : outs)
                for (int t : ins) add(f, t, 0);
        }
    }
    return inst;
}

std::string emit_tsplib_atsp(const AtspInstance& inst, const std::string& name) {
    std::ostringstream out;
    out << "NAME: " << name << "\n"
        << "TYPE: ATSP\n"
        << "COMMENT: ladder-gadget encoding; optimal tour weight = minimal repeated vertices\n"
        << "DIMENSION: " << inst.node_count << "\n"
        << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
        << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i < inst.node_count; ++i) {
        for (int j = 0; j < inst.node_count; ++j) {
            if (j) out << ' ';
            out << inst.weight(i, j);
        }
        out << "\n";
    }
    out << "EOF\n";
    return out.str();
}

std::vector<int> walk_to_atsp_tour(const Graph& g, const AtspInstance& inst, const Walk& walk) {
    const int n = inst.original_n;
    if (g.vertex_count() != n)
        throw std::invalid_argument("walk_to_atsp_tour: graph does not match the instance");
    if (!verify_walk(g, walk, WalkKind::cycle).valid)
        throw std::invalid_argument("walk_to_atsp_tour: not a valid cycle walk");
    std::vector<int> mult(n, 0);
    for (Vertex v : walk.vertices) ++mult[v];
    if (*std::max_element(mult.begin(), mult.end()) > n)
        throw std::invalid_argument(
            "walk_to_atsp_tour: a vertex repeats more than n times; normalize the walk first");

    std::vector<int> tour;
    tour.reserve(inst.node_count);
    std::vector<int> occ(n, 0);
    for (Vertex v : walk.vertices) {
        int j = ++occ[v];
        if (mult[v] == 1) {
            for (int i = n; i >= 1; --i) {  // free upward sweep: in at c_n, out at a_1
                tour.push_back(inst.c_node(v, i));
                tour.push_back(inst.b_node(v, i));
                tour.push_back(inst.a_node(v, i));
            }
        } else if (j < mult[v]) {
            tour.push_back(inst.a_node(v, j));  // visit j descends column j only
            tour.push_back(inst.b_node(v, j));
            tour.push_back(inst.c_node(v, j));
        } else {
            for (int i = j; i <= n; ++i) {  // last visit mops up the tail columns
                tour.push_back(inst.a_node(v, i));
                tour.push_back(inst.b_node(v, i));
                tour.push_back(inst.c_node(v, i));
            }
        }
    }
    return tour;
}

std::int64_t atsp_tour_weight(const AtspInstance& inst, const std::vector<int>& tour) {
    if (tour.empty()) return 0;
    std::int64_t total = 0;
    for (size_t i = 0; i < tour.size(); ++i)
        total += inst.weight(tour[i], tour[(i + 1) % tour.size()]);
    return total;
}

Walk atsp_tour_to_walk(const AtspInstance& inst, const std::vector<int>& tour) {
    if (static_cast<int>(tour.size()) != inst.node_count)
        throw std::invalid_argument("atsp_tour_to_walk: tour must visit every gadget node once");
    std::vector<char> seen(inst.node_count, 0);
    for (int x : tour) {
        if (x < 0 || x >= inst.node_count || seen[x])
            throw std::invalid_argument("atsp_tour_to_walk: not a permutation of the gadget nodes");
        seen[x] = 1;
    }
    for (size_t i = 0; i < tour.size(); ++i)
        if (!inst.arcs.count(inst.key(tour[i], tour[(i + 1) % tour.size()])))
            throw std::invalid_argument("atsp_tour_to_walk: tour uses an arc outside the construction");

    size_t start = 0;
    bool boundary = false;
    for (size_t i = 0; i < tour.size() && !boundary; ++i) {
        size_t prev = (i + tour.size() - 1) % tour.size();
        if (inst.origin(tour[prev]) != inst.origin(tour[i])) {
            start = i;
            boundary = true;
        }
    }
    if (!boundary) return Walk{{inst.origin(tour[0])}};

    std::vector<Vertex> out;
    for (size_t i = 0; i < tour.size(); ++i) {
        Vertex v = inst.origin(tour[(start + i) % tour.size()]);
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return Walk{std::move(out)};
}

} // namespace khcp
