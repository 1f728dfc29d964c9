#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "khcp/exact.hpp"
#include "khcp/generators.hpp"
#include "khcp/reductions.hpp"
#include "khcp/walk.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace khcp;
using namespace khcp_testing;

TEST_CASE("hcp gadget shapes") {
    // Middle vertex of a three-path expands to a 3-cycle of copies wired to
    // both neighbors: 5 nodes, 9 edges.
    auto inst = to_hcp_instance(path_graph(3), UnboundedAssignment({1}));
    CHECK(inst.graph.vertex_count() == 5);
    CHECK(inst.graph.edge_count() == 9);
    CHECK(inst.origin == std::vector<Vertex>{0, 1, 1, 1, 2});
    CHECK(inst.members[1] == std::vector<Vertex>{1, 2, 3});
    CHECK(inst.members[0] == std::vector<Vertex>{0});

    // Empty assignment is the identity construction.
    auto same = to_hcp_instance(cycle_graph(3), UnboundedAssignment{});
    CHECK(same.graph == cycle_graph(3));

    // Two copies collapse to one edge: an unbounded endpoint of an edge
    // turns the two-vertex graph into a triangle.
    auto tri = to_hcp_instance(path_graph(2), UnboundedAssignment({0}));
    CHECK(tri.graph == cycle_graph(3));

    auto k1 = to_hcp_instance(path_graph(1), UnboundedAssignment{});
    CHECK(k1.graph.vertex_count() == 1);

    CHECK_THROWS_AS(to_hcp_instance(path_graph(2), UnboundedAssignment({5})),
                    std::invalid_argument);
}

TEST_CASE("hcp cycles project back to walks") {
    auto inst = to_hcp_instance(path_graph(3), UnboundedAssignment({1}));
    Walk w = hcp_cycle_to_walk(inst, {0, 1, 4, 2, 3});
    CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 1});
    CHECK(verify_walk(path_graph(3), w, WalkKind::cycle, UnboundedAssignment({1})).valid);

    auto tri = to_hcp_instance(path_graph(2), UnboundedAssignment({0}));
    Walk two = hcp_cycle_to_walk(tri, {0, 1, 2});
    CHECK(verify_walk(path_graph(2), two, WalkKind::cycle, UnboundedAssignment({0})).valid);

    auto k1 = to_hcp_instance(path_graph(1), UnboundedAssignment{});
    CHECK(hcp_cycle_to_walk(k1, {0}).vertices == std::vector<Vertex>{0});

    CHECK_THROWS_AS(hcp_cycle_to_walk(inst, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(hcp_cycle_to_walk(inst, {0, 1, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(hcp_cycle_to_walk(inst, {0, 4, 1, 2, 3}), std::invalid_argument);  // non-edge
}

TEST_CASE("hcp gadget is an exact equivalence on small graphs") {
    int cases = 0;
    for (std::uint64_t seed = 1; cases < 20; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);
        Graph g;
        try {
            g = gen_random_connected(n, 2.0 + 0.4 * static_cast<double>(seed % 3), seed);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++cases;
        // Every unbounded set of size <= 2.
        std::vector<std::vector<Vertex>> sets{{}};
        for (Vertex a = 0; a < n; ++a) {
            sets.push_back({a});
            for (Vertex b = a + 1; b < n; ++b) sets.push_back({a, b});
        }
        for (const auto& s : sets) {
            UnboundedAssignment ub(s);
            auto inst = to_hcp_instance(g, ub);
            bool via_gadget = has_hamiltonian_cycle(inst.graph);
            bool direct = feasible_with_unbounded(g, ub).has_value();
            CAPTURE(seed);
            CAPTURE(n);
            CHECK(via_gadget == direct);
        }
    }
}

TEST_CASE("atsp gadget layout") {
    auto inst = to_atsp_instance(path_graph(2));
    CHECK(inst.original_n == 2);
    CHECK(inst.node_count == 12);
    CHECK(inst.sentinel == 3);
    CHECK(inst.a_node(0, 1) == 0);
    CHECK(inst.a_node(0, 2) == 1);
    CHECK(inst.b_node(0, 1) == 2);
    CHECK(inst.c_node(0, 2) == 5);
    CHECK(inst.a_node(1, 1) == 6);
    CHECK(inst.c_node(1, 2) == 11);
    CHECK(inst.origin(5) == 0);
    CHECK(inst.origin(6) == 1);

    // The one unit-cost arc per ladder sits at a_1 -> b_1; the reverse hop is
    // free and anything outside the construction costs the sentinel.
    CHECK(inst.weight(inst.a_node(0, 1), inst.b_node(0, 1)) == 1);
    CHECK(inst.weight(inst.b_node(0, 1), inst.a_node(0, 1)) == 0);
    CHECK(inst.weight(inst.a_node(1, 1), inst.b_node(1, 1)) == 1);
    CHECK(inst.weight(0, 0) == 3);
    CHECK(inst.weight(inst.a_node(0, 1), inst.c_node(0, 2)) == 3);

    CHECK_THROWS_AS(to_atsp_instance(path_graph(1)), std::invalid_argument);
}

TEST_CASE("walks become tours of matching weight") {
    // No repeats: weight 0.
    Graph k2 = path_graph(2);
    auto inst2 = to_atsp_instance(k2);
    Walk two{{0, 1}};
    auto tour2 = walk_to_atsp_tour(k2, inst2, two);
    CHECK(static_cast<int>(tour2.size()) == inst2.node_count);
    CHECK(atsp_tour_weight(inst2, tour2) == 0);
    CHECK(atsp_tour_to_walk(inst2, tour2).vertices == std::vector<Vertex>{0, 1});

    // One repeat: weight 1, and the projection returns the original walk.
    Graph p3 = path_graph(3);
    auto inst3 = to_atsp_instance(p3);
    Walk mid{{0, 1, 2, 1}};
    auto tour3 = walk_to_atsp_tour(p3, inst3, mid);
    CHECK(atsp_tour_weight(inst3, tour3) == 1);
    CHECK(atsp_tour_to_walk(inst3, tour3).vertices == std::vector<Vertex>{0, 1, 2, 1});

    // Oversized multiplicities are rejected until normalized.
    Walk fat{{0, 1, 2, 1, 0, 1, 2, 1}};
    REQUIRE(verify_walk(p3, fat, WalkKind::cycle).valid);
    CHECK_THROWS_AS(walk_to_atsp_tour(p3, inst3, fat), std::invalid_argument);
    Walk slim = normalize_walk(p3, fat, WalkKind::cycle);
    CHECK_NOTHROW(walk_to_atsp_tour(p3, inst3, slim));

    CHECK_THROWS_AS(walk_to_atsp_tour(p3, inst3, Walk{{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(walk_to_atsp_tour(k2, inst3, two), std::invalid_argument);
}

TEST_CASE("tour weight tracks repeat counts on random graphs") {
    int cases = 0;
    for (std::uint64_t seed = 3; cases < 15; ++seed) {
        int n = 3 + static_cast<int>(seed % 3);
        Graph g;
        try {
            g = gen_random_connected(n, 2.2, seed);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++cases;
        auto exact = solve_exact(g);
        auto inst = to_atsp_instance(g);
        auto tour = walk_to_atsp_tour(g, inst, exact.walk);
        auto report = verify_walk(g, exact.walk, WalkKind::cycle);
        CAPTURE(seed);
        CHECK(atsp_tour_weight(inst, tour) == report.k);
        auto back = atsp_tour_to_walk(inst, tour);
        CHECK(verify_walk(g, back, WalkKind::cycle).k <= report.k);
    }
}

TEST_CASE("atsp tour projection rejects corrupt tours") {
    Graph p3 = path_graph(3);
    auto inst = to_atsp_instance(p3);
    auto tour = walk_to_atsp_tour(p3, inst, Walk{{0, 1, 2, 1}});

    auto broken = tour;
    std::swap(broken[0], broken[5]);  // still a permutation, arcs now invalid
    CHECK_THROWS_AS(atsp_tour_to_walk(inst, broken), std::invalid_argument);

    auto dup = tour;
    dup[1] = dup[0];
    CHECK_THROWS_AS(atsp_tour_to_walk(inst, dup), std::invalid_argument);

    CHECK_THROWS_AS(atsp_tour_to_walk(inst, std::vector<int>{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("tsplib atsp rendering") {
    auto inst = to_atsp_instance(path_graph(2));
    std::string text = emit_tsplib_atsp(inst, "two");
    CHECK(text.find("NAME: two") != std::string::npos);
    CHECK(text.find("TYPE: ATSP") != std::string::npos);
    CHECK(text.find("DIMENSION: 12") != std::string::npos);
    CHECK(text.find("EDGE_WEIGHT_FORMAT: FULL_MATRIX") != std::string::npos);
    CHECK(text.find("EOF") != std::string::npos);

    // Matrix block: 12 rows of 12 entries between the section marker and EOF.
    std::istringstream in(text.substr(text.find("EDGE_WEIGHT_SECTION\n") + 20));
    int rows = 0;
    std::string line;
    while (std::getline(in, line) && line != "EOF") {
        std::istringstream row(line);
        int x, entries = 0;
        while (row >> x) ++entries;
        CHECK(entries == 12);
        ++rows;
    }
    CHECK(rows == 12);
}
