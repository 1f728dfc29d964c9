#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "khcp/graph.hpp"

namespace khcp {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Plain text graph format: first line "n m", then m lines "u v" with
/// 0-based endpoints. Duplicate edges and self loops are parse errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

/// Canonical emission: "n m" then edges sorted lexicographically, one per
/// line, LF endings. parse(emit(g)) == g.
void emit_edge_list(const Graph& g, std::ostream& out);
std::string emit_edge_list(const Graph& g);

/// TSPLIB HCP reader (EDGE_DATA_FORMAT: EDGE_LIST, 1-based vertex ids,
/// section terminated by -1). Duplicate edges are collapsed; self loops and
/// out-of-range ids are parse errors carrying the offending line number.
Graph parse_tsplib_hcp(std::istream& in);
Graph parse_tsplib_hcp_file(const std::string& path);

} // namespace khcp
