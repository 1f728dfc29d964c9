#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "doctest.h"
#include "khcp/exact.hpp"
#include "khcp/generators.hpp"
#include "khcp/walk.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace khcp;
using namespace khcp_testing;

namespace {

void check_result(const Graph& g, const ExactResult& r) {
    auto report = verify_walk(g, r.walk, WalkKind::cycle, r.unbounded);
    CHECK(report.valid);
    CHECK(static_cast<int>(r.unbounded.size()) == r.m);
}

} // namespace

TEST_CASE("solve_exact on small fixtures") {
    auto tri = solve_exact(cycle_graph(3));
    CHECK(tri.m == 0);
    CHECK(tri.subsets_tried == 1);
    check_result(cycle_graph(3), tri);

    auto k4 = solve_exact(complete_graph(4));
    CHECK(k4.m == 0);
    CHECK(k4.subsets_tried == 1);

    auto c5 = solve_exact(cycle_graph(5));
    CHECK(c5.m == 0);

    // Three-vertex path: the middle vertex must repeat. Candidates {} and {0}
    // precede the winner {1} in (size, numeric) order.
    auto p3 = solve_exact(path_graph(3));
    CHECK(p3.m == 1);
    CHECK(p3.unbounded.members() == std::vector<Vertex>{1});
    CHECK(p3.subsets_tried == 3);
    check_result(path_graph(3), p3);

    // Four-vertex path: both internal vertices are cut vertices, so {1,2} is
    // forced. Its rank among all subsets ordered by (size, value) is 8.
    auto p4 = solve_exact(path_graph(4));
    CHECK(p4.m == 2);
    CHECK(p4.unbounded.members() == std::vector<Vertex>{1, 2});
    CHECK(p4.subsets_tried == 8);
    check_result(path_graph(4), p4);

    // Star: the center repeats, nothing else can.
    auto s4 = solve_exact(star_graph(4));
    CHECK(s4.m == 1);
    CHECK(s4.unbounded.members() == std::vector<Vertex>{0});
    CHECK(s4.subsets_tried == 2);

    auto one = solve_exact(path_graph(1));
    CHECK(one.m == 0);
    CHECK(one.walk.vertices == std::vector<Vertex>{0});
    CHECK(one.subsets_tried == 1);

    auto two = solve_exact(path_graph(2));
    CHECK(two.m == 0);
    check_result(path_graph(2), two);
}

TEST_CASE("solve_exact on Petersen graphs") {
    // Classic Petersen: hypohamiltonian, and vertex-transitive, so one
    // repeated vertex suffices and the singleton {0} already works.
    Graph p = gen_generalized_petersen(5, 2);
    auto r = solve_exact(p);
    CHECK(r.m == 1);
    CHECK(r.subsets_tried == 2);
    check_result(p, r);

    // Equatorial G(8,4): no Hamiltonian cycle, no single-vertex fix, but a
    // two-vertex unbounded set exists. 17 candidates precede size two.
    Graph eq = gen_generalized_petersen(8, 4);
    auto req = solve_exact(eq);
    CHECK(req.m == 2);
    CHECK(req.subsets_tried > 17);
    CHECK(req.subsets_tried <= 137);  // 1 + 16 + C(16,2)
    check_result(eq, req);
}

TEST_CASE("feasible_with_unbounded answers fixed-assignment queries") {
    Graph p4 = path_graph(4);
    CHECK(feasible_with_unbounded(p4, UnboundedAssignment({1, 2})).has_value());
    CHECK_FALSE(feasible_with_unbounded(p4, UnboundedAssignment({1})).has_value());
    CHECK_FALSE(feasible_with_unbounded(p4, UnboundedAssignment{}).has_value());

    auto walk = feasible_with_unbounded(p4, UnboundedAssignment({0, 1, 2, 3}));
    REQUIRE(walk.has_value());
    CHECK(verify_walk(p4, *walk, WalkKind::cycle, UnboundedAssignment({0, 1, 2, 3})).valid);

    Graph eq = gen_generalized_petersen(8, 4);
    CHECK_FALSE(feasible_with_unbounded(eq, UnboundedAssignment{}).has_value());
    auto sol = petersen_construction(8);
    CHECK(feasible_with_unbounded(eq, sol.unbounded).has_value());

    // Disconnected graphs are never feasible.
    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(feasible_with_unbounded(split, UnboundedAssignment({0, 1, 2, 3})).has_value());
}

TEST_CASE("dp table for the three-vertex path") {
    DpTable table = compute_dp_table(path_graph(3), UnboundedAssignment({1}));
    // Start anchored at 0: mask {0,1} is reached at endpoint 1, mask {0,2}
    // is unreachable (0-2 is not an edge), and the full mask is reachable at
    // endpoints 1 and 2 but never back at the anchor.
    CHECK(table.endpoints(0b011) == 0b010);
    CHECK(table.endpoints(0b101) == 0);
    CHECK(table.is_set(0b111, 1));
    CHECK(table.is_set(0b111, 2));
    CHECK_FALSE(table.is_set(0b111, 0));
}

TEST_CASE("solve_exact input validation") {
    CHECK_THROWS_AS(solve_exact(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(solve_exact(path_graph(25)), std::invalid_argument);
    ExactOptions small;
    small.max_n = 8;
    CHECK_THROWS_AS(solve_exact(path_graph(9), small), std::invalid_argument);
    CHECK_THROWS_AS(feasible_with_unbounded(path_graph(9), UnboundedAssignment{}, small),
                    std::invalid_argument);
}

TEST_CASE("solve_exact honors its time budget") {
    ExactOptions opts;
    opts.time_budget = std::chrono::duration<double>(0.0);

    // First DP for the four-vertex path happens at size 2, after candidates
    // of sizes 0 and 1 (and the smaller size-2 masks) were ruled out by the
    // cut filter, so the bound reports k >= 2 after 8 enumerated subsets.
    try {
        solve_exact(path_graph(4), opts);
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(e.lower_bound() == 2);
        CHECK(e.subsets_tried() == 8);
    }

    // Without cut vertices the very first candidate hits the budget check.
    try {
        solve_exact(cycle_graph(3), opts);
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(e.lower_bound() == 0);
        CHECK(e.subsets_tried() == 1);
    }
}

TEST_CASE("solve_exact matches the exhaustive oracle") {
    int cases = 0;
    for (std::uint64_t seed = 1; cases < 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);
        double avg = 1.9 + 0.4 * static_cast<double>(seed % 4);
        Graph g;
        try {
            g = gen_random_connected(n, avg, seed);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++cases;
        CAPTURE(seed);
        CAPTURE(n);
        auto fast = solve_exact(g);
        auto slow = exhaustive_oracle(g, WalkKind::cycle);
        CHECK(fast.m == slow.m);
        check_result(g, fast);
        // The oracle's own witness stands on its own.
        auto oracle_report = verify_walk(g, slow.walk, WalkKind::cycle);
        CHECK(oracle_report.valid);
        CHECK(oracle_report.k <= slow.m);
    }
}
