#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khcp/graph.hpp"

namespace khcp {

/// A walk is a vertex sequence in which consecutive vertices are adjacent.
/// Walks here are allowed to repeat vertices; a vertex appearing more than
/// once is called unbounded, a vertex appearing exactly once bounded.
struct Walk {
    std::vector<Vertex> vertices;

    size_t length() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
};

enum class WalkKind { path, cycle };

/// Set of vertices allowed to repeat. Kept sorted and duplicate-free.
class UnboundedAssignment {
public:
    UnboundedAssignment() = default;
    explicit UnboundedAssignment(std::vector<Vertex> members);

    bool contains(Vertex v) const;
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }

    bool operator==(const UnboundedAssignment&) const = default;

private:
    std::vector<Vertex> members_;
};

enum class VerifyFailure {
    missing_vertex,
    non_edge_step,
    ends_not_adjacent,
    consecutive_repeat,
    unclaimed_repeat,
};

std::string to_string(VerifyFailure f);

struct VerificationReport {
    bool valid = false;
    WalkKind kind = WalkKind::path;
    int k = 0;                     // number of repeated vertices
    std::vector<Vertex> repeated;  // ascending
    std::optional<VerifyFailure> failure;
};

/// Checks that the walk covers every vertex, takes only edge steps, and (for
/// cycles) ends at a vertex distinct from and adjacent to its start. A
/// single-vertex graph's walk [v] is a valid path and cycle with k = 0.
/// When `claimed` is given, every repeated vertex must be a member.
VerificationReport verify_walk(const Graph& g, const Walk& walk, WalkKind kind,
                               const std::optional<UnboundedAssignment>& claimed = std::nullopt);

/// Removes redundant excursions so every vertex appears at most n times:
/// a segment between two occurrences of the same vertex is deleted (with one
/// of the occurrences) when every vertex inside it also occurs outside.
/// The repeated-vertex set can only shrink and validity is preserved.
/// Throws std::invalid_argument if the input walk is not valid for `kind`.
Walk normalize_walk(const Graph& g, const Walk& walk, WalkKind kind);

} // namespace khcp
