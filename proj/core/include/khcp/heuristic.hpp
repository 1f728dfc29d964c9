#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "khcp/graph.hpp"
#include "khcp/walk.hpp"

namespace khcp {

/// full: close the final path with the two-endpoint search over endpoint
/// pairs (more arrangements, usually fewer repeats). fast: close it with the
/// single-endpoint reroute search (smaller state space).
enum class HeuristicMode { full, fast };

struct HeuristicConfig {
    int cap_factor = 10;            // walk length cap, in multiples of n
    int state_ceiling_factor = 50;  // search state cap, in multiples of n^2
};

struct SolveCounters {
    std::int64_t reroute_calls = 0;
    std::int64_t bfs_states_expanded = 0;
    std::int64_t rotations_applied = 0;
};

/// A search phase ran out of candidate states or hit a safety cap before it
/// could produce a walk.
class SearchStuckError : public std::runtime_error {
public:
    explicit SearchStuckError(const std::string& what) : std::runtime_error(what) {}
};

struct HeuristicResult {
    Walk walk;
    UnboundedAssignment unbounded;
    int k = 0;  // == unbounded.size()
    SolveCounters counters;
};

enum class CycleCheckResult {
    no_cycle,  // ends cannot be made adjacent by one rotation
    closed,    // ends are adjacent (possibly after an in-place rotation)
    extend,    // cycle found and rotated so the back can reach extend_to
    stuck,     // cycle found but no path vertex has an unvisited neighbor
};

struct CycleCheck {
    CycleCheckResult result = CycleCheckResult::no_cycle;
    Vertex extend_to = -1;  // set for extend: unvisited, adjacent to path.back()
};

/// Checks whether the path closes into a cycle: if some interior position i
/// has path[i] adjacent to the back and path[i+1] adjacent to the front,
/// reversing the tail from i+1 makes the ends adjacent. With is_last the
/// check stops there; otherwise the cycle is rotated so that the vertex with
/// the lowest-degree unvisited neighbor becomes the back, turning the cycle
/// back into an extendable path. The path is modified in place; its vertex
/// multiset never changes.
CycleCheck preemptive_cycle_check(const Graph& g, std::vector<Vertex>& path,
                                  const std::vector<char>& visited,
                                  const std::vector<int>& unvisited_degree, bool is_last);

/// Mutable state threaded through the solver phases, exposed so each phase
/// can be driven directly in tests.
struct SearchState {
    std::vector<Vertex> path;
    std::vector<char> visited;          // vertex occurs on the path
    std::vector<int> unvisited_degree;  // per vertex, its unvisited neighbors
    std::vector<char> unbounded;        // vertices allowed to repeat
    SolveCounters counters;
};

/// Builds a consistent state from a path (consecutive vertices must be
/// adjacent) and an initial set of unbounded marks.
SearchState make_search_state(const Graph& g, std::vector<Vertex> path,
                              const std::vector<Vertex>& unbounded);

inline constexpr std::int64_t kUnlimitedStates =
    std::numeric_limits<std::int64_t>::max() / 2;

/// 0-1 BFS over single-endpoint states: each state is a rearrangement of the
/// path ending at that vertex, reached through rotations, free revisits of
/// unbounded vertices, and unit-cost revisits that mark a bounded vertex
/// unbounded. With is_last=false the search stops at the cheapest state whose
/// endpoint still has an unvisited neighbor (or that closes into an
/// extendable cycle) and returns that endpoint; with is_last=true the front
/// is frozen and the search stops when the ends become adjacent, returning
/// -1. The winning arrangement replaces state.path and its repeats are
/// marked unbounded. Throws SearchStuckError on exhaustion or budget.
Vertex reroute(const Graph& g, SearchState& state, bool is_last,
               std::int64_t state_budget = kUnlimitedStates);

/// Like reroute with is_last, but states are unordered endpoint pairs, so
/// both ends may move; reaches cheaper closures at the cost of up to n^2
/// states. Replaces state.path with a closed walk (ends adjacent) and marks
/// its repeats. Throws SearchStuckError on exhaustion or budget.
void path_to_cycle(const Graph& g, SearchState& state,
                   std::int64_t state_budget = kUnlimitedStates);

/// Polynomial cycle-walk search: marks cut vertices unbounded (they repeat in
/// every cycle walk), grows a path greedily from a maximum-degree start
/// toward lowest-degree unvisited neighbors, escapes dead ends with reroute,
/// and finally closes the path per `mode`. The result is verified; the
/// unbounded set it reports is exactly the walk's repeated set. Throws
/// std::invalid_argument on a disconnected graph and SearchStuckError if a
/// safety cap fires.
HeuristicResult solve_heuristic(const Graph& g, HeuristicMode mode,
                                const HeuristicConfig& config = {});

} // namespace khcp
