#include "khcp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace khcp {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (...) {
        return false;
    }
    return pos == token.size();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            out = trim(line);
            if (!out.empty()) return true;
        }
        return false;
    };

    std::string content;
    if (!next_content_line(content)) throw ParseError("empty input", 1);
    {
        std::istringstream header(content);
        std::string a, b, extra;
        header >> a >> b;
        if (!parse_int(a, n) || !parse_int(b, m) || n < 0 || m < 0 || (header >> extra))
            throw ParseError("expected header 'n m'", lineno);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(content)) throw ParseError("expected " + std::to_string(m) + " edges", lineno + 1);
        std::istringstream es(content);
        std::string a, b, extra;
        es >> a >> b;
        long long u, v;
        if (!parse_int(a, u) || !parse_int(b, v) || (es >> extra))
            throw ParseError("expected edge 'u v'", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex id out of range", lineno);
        if (u == v) throw ParseError("self loop", lineno);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
    }
}

Graph parse_edge_list_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_edge_list(in);
}

void emit_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    emit_edge_list(g, out);
    return out.str();
}

Graph parse_tsplib_hcp(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long dimension = -1;
    bool saw_type = false;
    bool saw_format = false;

    // Header: "KEY : VALUE" lines until EDGE_DATA_SECTION.
    while (std::getline(in, line)) {
        ++lineno;
        std::string content = trim(line);
        if (content.empty()) continue;
        std::string key = content, value;
        size_t colon = content.find(':');
        if (colon != std::string::npos) {
            key = trim(content.substr(0, colon));
            value = trim(content.substr(colon + 1));
        }
        if (key == "EDGE_DATA_SECTION") break;
        if (key == "TYPE") {
            if (value != "HCP") throw ParseError("TYPE must be HCP, got '" + value + "'", lineno);
            saw_type = true;
        } else if (key == "DIMENSION") {
            if (!parse_int(value, dimension) || dimension <= 0)
                throw ParseError("DIMENSION must be a positive integer", lineno);
        } else if (key == "EDGE_DATA_FORMAT") {
            if (value != "EDGE_LIST")
                throw ParseError("unsupported EDGE_DATA_FORMAT '" + value + "'", lineno);
            saw_format = true;
        } else if (key == "NAME" || key == "COMMENT") {
            // informational
        } else if (key == "EOF") {
            throw ParseError("EOF before EDGE_DATA_SECTION", lineno);
        }
        // Unknown keys are ignored.
    }
    if (!saw_type) throw ParseError("missing TYPE: HCP header", lineno);
    if (dimension < 0) throw ParseError("missing DIMENSION header", lineno);
    if (!saw_format) throw ParseError("missing EDGE_DATA_FORMAT: EDGE_LIST header", lineno);

    std::set<Edge> edges;
    bool terminated = false;
    while (!terminated && std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(trim(line));
        std::string tok;
        std::vector<long long> ids;
        while (tokens >> tok) {
            if (tok == "EOF") break;
            long long v;
            if (!parse_int(tok, v)) throw ParseError("expected vertex id, got '" + tok + "'", lineno);
            if (v == -1) {
                terminated = true;
                break;
            }
            ids.push_back(v);
        }
        if (ids.size() % 2 != 0 && !terminated)
            throw ParseError("dangling vertex id in edge list", lineno);
        if (terminated && ids.size() % 2 != 0)
            throw ParseError("dangling vertex id before -1", lineno);
        for (size_t i = 0; i + 1 < ids.size(); i += 2) {
            long long u = ids[i], v = ids[i + 1];
            if (u < 1 || u > dimension || v < 1 || v > dimension)
                throw ParseError("vertex id out of range 1.." + std::to_string(dimension), lineno);
            if (u == v) throw ParseError("self loop", lineno);
            Vertex a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    if (!terminated) throw ParseError("edge list not terminated by -1", lineno);

    return Graph::from_edges(static_cast<int>(dimension),
                             std::vector<Edge>(edges.begin(), edges.end()));
}

Graph parse_tsplib_hcp_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_tsplib_hcp(in);
}

} // namespace khcp
