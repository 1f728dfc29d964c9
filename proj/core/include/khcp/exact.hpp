#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "khcp/graph.hpp"
#include "khcp/walk.hpp"

namespace khcp {

/// Thrown when solve_exact runs out of its wall-clock budget. Every subset
/// size below `lower_bound` was exhausted, so the minimum k is at least that.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(int lower_bound, std::uint64_t subsets_tried)
        : std::runtime_error("exact solve exceeded its time budget; minimum k is at least " +
                             std::to_string(lower_bound)),
          lower_bound_(lower_bound),
          subsets_tried_(subsets_tried) {}

    int lower_bound() const { return lower_bound_; }
    std::uint64_t subsets_tried() const { return subsets_tried_; }

private:
    int lower_bound_;
    std::uint64_t subsets_tried_;
};

struct ExactOptions {
    int max_n = 24;
    std::optional<std::chrono::duration<double>> time_budget;
};

struct ExactResult {
    int m = 0;                     // minimum number of unbounded vertices
    Walk walk;                     // witness cycle walk with repeated subset of `unbounded`
    UnboundedAssignment unbounded;
    std::uint64_t subsets_tried = 0;  // rank of the found subset in (popcount, numeric) order
};

/// Dynamic program over (visited-mask, endpoint) states for one candidate
/// unbounded set. Conceptually dp[mask][j] holds a back-pointer to either
/// (mask minus j, k) for an edge step from k, or (mask, k) for a zero-mask
/// revisit step reaching j through unbounded vertices inside the mask.
/// Stored as one reachability word per mask; predecessors are recovered on
/// demand when a walk is reconstructed.
class DpTable {
public:
    void reset(int n);
    bool is_set(std::uint32_t mask, int j) const { return (reach_[mask] >> j) & 1u; }
    std::uint32_t endpoints(std::uint32_t mask) const { return reach_[mask]; }

private:
    friend class ExactSolver;
    std::vector<std::uint32_t> reach_;
};

/// True iff the graph admits a Hamiltonian cycle walk whose repeated vertices
/// all lie in `unbounded`; returns the witness walk when feasible, nullopt
/// otherwise (including disconnected input). Throws std::invalid_argument
/// when n exceeds options.max_n.
std::optional<Walk> feasible_with_unbounded(const Graph& g, const UnboundedAssignment& unbounded,
                                            const ExactOptions& options = {});

/// Runs the dynamic program for one candidate set and returns the filled
/// table (inspection hook for tests).
DpTable compute_dp_table(const Graph& g, const UnboundedAssignment& unbounded);

/// Minimum-k solver: enumerates candidate unbounded sets by size, then by
/// mask value, and returns the first feasible one. Candidate sets missing a
/// cut vertex are provably infeasible and are skipped without running the
/// dynamic program, but still counted so subsets_tried reports the canonical
/// enumeration rank. Throws BudgetExceededError when over budget and
/// std::invalid_argument on disconnected input or n > options.max_n.
ExactResult solve_exact(const Graph& g, const ExactOptions& options = {});

} // namespace khcp
