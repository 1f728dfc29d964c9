#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "khcp/generators.hpp"
#include "khcp/graph.hpp"
#include "khcp/io.hpp"
#include "support/builders.hpp"

using namespace khcp;
using khcp_testing::cycle_graph;
using khcp_testing::path_graph;

TEST_CASE("from_edges normalizes storage") {
    Graph g = Graph::from_edges(3, {{2, 1}, {1, 0}, {0, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK(g.has_edge(2, 0));
    CHECK(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK_FALSE(path_graph(3).has_edge(0, 2));
}

TEST_CASE("from_edges rejects bad edges") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
}

TEST_CASE("parse_edge_list reads the plain format") {
    std::istringstream in("3 2\n0 1\n1 2\n");
    CHECK(parse_edge_list(in) == path_graph(3));

    // Blank lines and stray whitespace are fine; edge order is normalized.
    std::istringstream messy("\n  3 2  \n\n0 1\n\n2 1\n");
    CHECK(parse_edge_list(messy) == path_graph(3));
}

TEST_CASE("emit_edge_list is canonical and round trips") {
    Graph tri = cycle_graph(3);
    CHECK(emit_edge_list(tri) == "3 3\n0 1\n0 2\n1 2\n");

    Graph pete = gen_generalized_petersen(5, 2);
    std::istringstream back(emit_edge_list(pete));
    CHECK(parse_edge_list(back) == pete);
}

TEST_CASE("parse_edge_list reports the offending line") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_edge_list(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of(" \n \n") == 1);
    CHECK(line_of("a b\n") == 1);
    CHECK(line_of("3\n") == 1);
    CHECK(line_of("3 2 9\n") == 1);
    CHECK(line_of("3 2\n0 1\n") == 3);       // truncated edge section
    CHECK(line_of("2 1\n0 5\n") == 2);       // endpoint out of range
    CHECK(line_of("2 1\n1 1\n") == 2);       // self loop
    CHECK(line_of("2 1\n0 1 2\n") == 2);     // trailing token
    CHECK(line_of("3 3\n0 1\n0 1\n1 2\n") == 4);  // duplicate caught at graph build
}

TEST_CASE("edge list files") {
    const char* path = "khcp_io_test_edges.txt";
    {
        std::ofstream out(path);
        out << emit_edge_list(cycle_graph(4));
    }
    CHECK(parse_edge_list_file(path) == cycle_graph(4));
    std::remove(path);
    CHECK_THROWS_AS(parse_edge_list_file("no_such_file_khcp.txt"), std::runtime_error);
}

TEST_CASE("parse_tsplib_hcp reads the 1-based format") {
    std::istringstream in(
        "NAME : toy\n"
        "COMMENT : five cycle with a duplicate edge\n"
        "TYPE : HCP\n"
        "DIMENSION : 5\n"
        "EDGE_DATA_FORMAT : EDGE_LIST\n"
        "EDGE_DATA_SECTION\n"
        "1 2\n"
        "2 3\n"
        "3 4\n"
        "4 5\n"
        "5 1\n"
        "2 3\n"
        "-1\n"
        "EOF\n");
    CHECK(parse_tsplib_hcp(in) == cycle_graph(5));

    // Several ids per line are allowed.
    std::istringstream packed(
        "TYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\n"
        "EDGE_DATA_SECTION\n1 2 2 3\n3 1 -1\nEOF\n");
    CHECK(parse_tsplib_hcp(packed) == cycle_graph(3));
}

TEST_CASE("parse_tsplib_hcp rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_tsplib_hcp(in);
    };
    CHECK_THROWS_AS(parse("TYPE : TSP\nDIMENSION : 3\n"), ParseError);
    CHECK_THROWS_AS(parse("TYPE : HCP\nEDGE_DATA_FORMAT : EDGE_LIST\n"
                          "EDGE_DATA_SECTION\n-1\nEOF\n"),
                    ParseError);  // no DIMENSION
    CHECK_THROWS_AS(parse("TYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\n"
                          "EDGE_DATA_SECTION\n1 2\n"),
                    ParseError);  // missing -1
    CHECK_THROWS_AS(parse("TYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\n"
                          "EDGE_DATA_SECTION\n2 2\n-1\n"),
                    ParseError);  // self loop
    CHECK_THROWS_AS(parse("TYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\n"
                          "EDGE_DATA_SECTION\n1 9\n-1\n"),
                    ParseError);  // out of range
    CHECK_THROWS_AS(parse("TYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\n"
                          "EDGE_DATA_SECTION\n1 2 3\n-1\n"),
                    ParseError);  // dangling id
    CHECK_THROWS_AS(parse("TYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : ADJ_LIST\n"),
                    ParseError);
    CHECK_THROWS_AS(parse("TYPE : HCP\nDIMENSION : 3\nEOF\n"), ParseError);
}
