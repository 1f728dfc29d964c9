#include <set>
#include <stdexcept>

#include "doctest.h"
#include "khcp/generators.hpp"
#include "khcp/structure.hpp"
#include "khcp/walk.hpp"

using namespace khcp;

TEST_CASE("random trees") {
    Graph t = gen_random_tree(8, 42);
    CHECK(t.vertex_count() == 8);
    CHECK(t.edge_count() == 7);
    CHECK(is_tree(t));

    CHECK(gen_random_tree(1, 7).edge_count() == 0);
    CHECK(gen_random_tree(2, 7).edges() == std::vector<Edge>{{0, 1}});
    CHECK_THROWS_AS(gen_random_tree(0, 1), std::invalid_argument);

    // Same seed, same tree; different seeds eventually differ.
    CHECK(gen_random_tree(9, 5) == gen_random_tree(9, 5));
    bool differs = false;
    for (std::uint64_t s = 0; s < 16 && !differs; ++s)
        differs = !(gen_random_tree(9, s) == gen_random_tree(9, s + 100));
    CHECK(differs);
}

TEST_CASE("random connected graphs hit the edge target") {
    Graph g = gen_random_connected(20, 3.0, 11);
    CHECK(g.vertex_count() == 20);
    CHECK(g.edge_count() == 30);  // n * avg / 2
    CHECK(is_connected(g));
    CHECK(g == gen_random_connected(20, 3.0, 11));

    // Half-up rounding: 5 * 2.2 / 2 = 5.5 -> 6 edges.
    CHECK(gen_random_connected(5, 2.2, 3).edge_count() == 6);

    // Dense draws still connect and land exactly on target.
    Graph dense = gen_random_connected(9, 7.0, 4);
    CHECK(dense.edge_count() == 32);
    CHECK(is_connected(dense));

    CHECK_THROWS_AS(gen_random_connected(1, 2.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_connected(10, 0.5, 0), std::invalid_argument);  // under n-1
    CHECK_THROWS_AS(gen_random_connected(5, 9.0, 0), std::invalid_argument);   // over capacity
}

TEST_CASE("generalized petersen graphs") {
    Graph p = gen_generalized_petersen(5, 2);  // classic Petersen
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(is_connected(p));

    // Equatorial case: inner skips pair up, so inner vertices have degree 2.
    Graph eq = gen_generalized_petersen(8, 4);
    CHECK(eq.vertex_count() == 16);
    CHECK(eq.edge_count() == 20);
    for (Vertex v = 0; v < 8; ++v) CHECK(eq.degree(v) == 3);
    for (Vertex v = 8; v < 16; ++v) CHECK(eq.degree(v) == 2);
    CHECK(cut_vertices(eq).empty());

    CHECK_NOTHROW(gen_generalized_petersen(3, 1));
    CHECK_THROWS_AS(gen_generalized_petersen(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_generalized_petersen(7, 4), std::invalid_argument);
    CHECK_THROWS_AS(gen_generalized_petersen(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_generalized_petersen(5, 0), std::invalid_argument);
}

TEST_CASE("closed-form equatorial solutions verify") {
    auto s8 = petersen_construction(8);
    Graph g8 = gen_generalized_petersen(8, 4);
    auto r8 = verify_walk(g8, s8.walk, WalkKind::cycle, s8.unbounded);
    CHECK(r8.valid);
    CHECK(s8.unbounded.size() == 2);
    // The claim is exact: every listed vertex really repeats.
    CHECK(r8.repeated == s8.unbounded.members());

    for (int n : {12, 16, 20}) {
        CAPTURE(n);
        auto s = petersen_construction(n);
        Graph g = gen_generalized_petersen(n, n / 2);
        auto r = verify_walk(g, s.walk, WalkKind::cycle, s.unbounded);
        CHECK(r.valid);
        CHECK(s.unbounded.size() == 3);
        CHECK(r.repeated == s.unbounded.members());
    }

    CHECK_THROWS_AS(petersen_construction(10), std::invalid_argument);
    CHECK_THROWS_AS(petersen_construction(4), std::invalid_argument);
}

TEST_CASE("bounded_rand stays in range and rejects zero") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        auto x = bounded_rand(rng, 7);
        CHECK(x < 7);
    }
    CHECK_THROWS_AS(bounded_rand(rng, 0), std::invalid_argument);
}
