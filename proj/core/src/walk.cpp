#include "khcp/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace khcp {

UnboundedAssignment::UnboundedAssignment(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool UnboundedAssignment::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::string to_string(VerifyFailure f) {
    switch (f) {
        case VerifyFailure::missing_vertex: return "missing vertex";
        case VerifyFailure::non_edge_step: return "non-edge step";
        case VerifyFailure::ends_not_adjacent: return "ends not adjacent";
        case VerifyFailure::consecutive_repeat: return "consecutive repeat";
        case VerifyFailure::unclaimed_repeat: return "unclaimed repeat";
    }
    return "unknown";
}

VerificationReport verify_walk(const Graph& g, const Walk& walk, WalkKind kind,
                               const std::optional<UnboundedAssignment>& claimed) {
    VerificationReport report;
    report.kind = kind;

    const auto& w = walk.vertices;
    const int n = g.vertex_count();
    if (w.empty()) {
        report.failure = VerifyFailure::missing_vertex;
        return report;
    }
    for (Vertex v : w) {
        if (v < 0 || v >= n) {
            report.failure = VerifyFailure::missing_vertex;
            return report;
        }
    }

    auto fail = [&](VerifyFailure f) {
        report.failure = f;
        return report;
    };

    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) return fail(VerifyFailure::consecutive_repeat);
        if (!g.has_edge(w[i], w[i + 1])) return fail(VerifyFailure::non_edge_step);
    }

    std::vector<int> count(n, 0);
    for (Vertex v : w) ++count[v];
    for (Vertex v = 0; v < n; ++v)
        if (count[v] == 0) return fail(VerifyFailure::missing_vertex);

    if (kind == WalkKind::cycle && n > 1) {
        if (w.front() == w.back()) return fail(VerifyFailure::ends_not_adjacent);
        if (!g.has_edge(w.front(), w.back())) return fail(VerifyFailure::ends_not_adjacent);
    }

    for (Vertex v = 0; v < n; ++v)
        if (count[v] > 1) report.repeated.push_back(v);
    report.k = static_cast<int>(report.repeated.size());

    if (claimed) {
        for (Vertex v : report.repeated)
            if (!claimed->contains(v)) return fail(VerifyFailure::unclaimed_repeat);
    }

    report.valid = true;
    return report;
}

Walk normalize_walk(const Graph& g, const Walk& walk, WalkKind kind) {
    auto report = verify_walk(g, walk, kind);
    if (!report.valid)
        throw std::invalid_argument("normalize_walk: input walk is not a valid " +
                                    std::string(kind == WalkKind::cycle ? "cycle" : "path"));

    std::vector<Vertex> w = walk.vertices;
    const int n = g.vertex_count();
    std::vector<int> count(n, 0);
    for (Vertex v : w) ++count[v];

    // Repeatedly delete a segment between two consecutive occurrences of a
    // vertex (plus one of the occurrences) when every vertex inside the
    // segment also occurs outside it. Restart after each deletion; the walk
    // strictly shrinks so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> last_seen(n, -1);
        for (size_t i = 0; i < w.size() && !changed; ++i) {
            Vertex v = w[i];
            if (last_seen[v] >= 0) {
                size_t lo = static_cast<size_t>(last_seen[v]);
                // Candidate deletion: positions (lo, i], the segment strictly
                // between the occurrences plus the occurrence at i.
                std::vector<int> inside(n, 0);
                for (size_t j = lo + 1; j < i; ++j) ++inside[w[j]];
                bool removable = true;
                for (size_t j = lo + 1; j < i; ++j) {
                    if (count[w[j]] - inside[w[j]] == 0) {
                        removable = false;
                        break;
                    }
                }
                if (removable && i > lo + 1) {
                    for (size_t j = lo + 1; j <= i; ++j) --count[w[j]];
                    w.erase(w.begin() + lo + 1, w.begin() + i + 1);
                    changed = true;
                    break;
                }
            }
            last_seen[v] = static_cast<int>(i);
        }
    }

    Walk out{std::move(w)};
    auto check = verify_walk(g, out, kind);
    if (!check.valid)
        throw std::logic_error("normalize_walk: normalization broke walk validity");
    return out;
}

} // namespace khcp
