#include "khcp/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "khcp/structure.hpp"

namespace khcp {

void DpTable::reset(int n) {
    reach_.assign(size_t{1} << n, 0);
}

/// One candidate set at a time: fills the per-mask reachability words level
/// by level (mask popcount order), then recovers predecessors on demand.
class ExactSolver {
public:
    explicit ExactSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {
        full_ = (n_ >= 32) ? 0 : ((std::uint32_t{1} << n_) - 1);
        adj_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[v] |= std::uint32_t{1} << w;
    }

    /// Runs the DP anchored at vertex 0 for one candidate unbounded set.
    /// Returns the smallest feasible cycle endpoint (neighbor of 0 reachable
    /// at the full mask), or -1 when infeasible.
    int run(std::uint32_t ubmask) {
        table_.reset(n_);
        auto& reach = table_.reach_;
        reach[1] = 1;  // walk start: mask {0}, endpoint 0

        // Masks are processed by popcount level; only masks containing the
        // anchor vertex 0 can have reachable endpoints. If an entire level
        // comes out empty no superset can be reached, so the candidate is
        // infeasible and the remaining levels are skipped.
        for (int level = 2; level <= n_; ++level) {
            bool any = false;
            int k = level - 1;  // bits besides the anchor
            std::uint32_t sub = (std::uint32_t{1} << k) - 1;
            const std::uint32_t limit = std::uint32_t{1} << (n_ - 1);
            while (sub < limit) {
                std::uint32_t mask = (sub << 1) | 1u;
                std::uint32_t r = 0;
                for (std::uint32_t rest = mask; rest;) {
                    std::uint32_t bit = rest & (0u - rest);
                    rest ^= bit;
                    int j = std::countr_zero(bit);
                    if (reach[mask ^ bit] & adj_[j]) r |= bit;
                }
                if (r) {
                    std::uint32_t eligible = mask & ubmask & ~r;
                    std::uint32_t frontier = r;
                    while (frontier && eligible) {
                        std::uint32_t add = 0;
                        for (std::uint32_t rest = frontier; rest;) {
                            std::uint32_t bit = rest & (0u - rest);
                            rest ^= bit;
                            add |= adj_[std::countr_zero(bit)];
                        }
                        add &= eligible;
                        r |= add;
                        eligible &= ~add;
                        frontier = add;
                    }
                    reach[mask] = r;
                    any = true;
                }
                // Gosper's hack: next mask with the same popcount.
                std::uint32_t c = sub & (0u - sub);
                std::uint32_t next = sub + c;
                sub = next ? ((((next ^ sub) >> 2) / c) | next) : limit;
            }
            if (!any) return -1;
        }

        std::uint32_t ends = table_.reach_[full_] & adj_[0];
        return ends ? std::countr_zero(ends) : -1;
    }

    /// Walks the back-pointers from (full mask, end) down to (mask {0}, 0).
    /// Edge steps are recovered from the previous mask's reachability word;
    /// revisit steps re-derive the in-mask BFS parents for the current mask.
    Walk recover(std::uint32_t ubmask, int end) const {
        const auto& reach = table_.reach_;
        std::vector<Vertex> rev;
        std::uint32_t mask = full_;
        int v = end;

        std::uint32_t cached_mask = 0;
        bool have_cache = false;
        std::vector<int> parent(n_, -1);

        while (true) {
            rev.push_back(v);
            if (mask == 1 && v == 0) break;
            if (rev.size() > size_t(n_) * n_ + 2)
                throw std::logic_error("exact walk recovery exceeded its length bound");

            std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
            std::uint32_t edge_preds = reach[prev] & adj_[v];
            if (edge_preds) {
                mask = prev;
                v = std::countr_zero(edge_preds);
                continue;
            }

            if (!have_cache || cached_mask != mask) {
                derive_parents(mask, ubmask, parent);
                cached_mask = mask;
                have_cache = true;
            }
            if (parent[v] < 0)
                throw std::logic_error("exact walk recovery found no predecessor");
            v = parent[v];
        }

        std::reverse(rev.begin(), rev.end());
        return Walk{std::move(rev)};
    }

    const DpTable& table() const { return table_; }

private:
    /// Rebuilds the revisit-step BFS for one mask: sources are the endpoints
    /// reachable by an edge step, expansion visits unbounded vertices inside
    /// the mask. Matches the reachability closure computed in run().
    void derive_parents(std::uint32_t mask, std::uint32_t ubmask, std::vector<int>& parent) const {
        const auto& reach = table_.reach_;
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<Vertex> queue;
        std::uint32_t seen = 0;
        for (std::uint32_t rest = mask; rest;) {
            std::uint32_t bit = rest & (0u - rest);
            rest ^= bit;
            int j = std::countr_zero(bit);
            if (reach[mask ^ bit] & adj_[j]) {
                queue.push_back(j);
                seen |= bit;
            }
        }
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            std::uint32_t nbrs = adj_[v] & mask & ubmask & ~seen;
            while (nbrs) {
                std::uint32_t bit = nbrs & (0u - nbrs);
                nbrs ^= bit;
                int w = std::countr_zero(bit);
                parent[w] = v;
                seen |= bit;
                queue.push_back(w);
            }
        }
    }

    const Graph& g_;
    int n_;
    std::uint32_t full_;
    std::vector<std::uint32_t> adj_;
    DpTable table_;
};

namespace {

std::uint32_t mask_of(const UnboundedAssignment& ub, int n) {
    std::uint32_t mask = 0;
    for (Vertex v : ub.members()) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("unbounded vertex " + std::to_string(v) + " out of range");
        mask |= std::uint32_t{1} << v;
    }
    return mask;
}

void check_size(const Graph& g, const ExactOptions& options) {
    if (g.vertex_count() < 1) throw std::invalid_argument("graph must have at least one vertex");
    if (g.vertex_count() > options.max_n)
        throw std::invalid_argument("exact solver supports at most " +
                                    std::to_string(options.max_n) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
}

UnboundedAssignment assignment_from_mask(std::uint32_t mask) {
    std::vector<Vertex> members;
    while (mask) {
        std::uint32_t bit = mask & (0u - mask);
        mask ^= bit;
        members.push_back(std::countr_zero(bit));
    }
    return UnboundedAssignment(std::move(members));
}

} // namespace

std::optional<Walk> feasible_with_unbounded(const Graph& g, const UnboundedAssignment& unbounded,
                                            const ExactOptions& options) {
    check_size(g, options);
    std::uint32_t ubmask = mask_of(unbounded, g.vertex_count());
    if (g.vertex_count() == 1) return Walk{{0}};
    if (!is_connected(g)) return std::nullopt;

    ExactSolver solver(g);
    int end = solver.run(ubmask);
    if (end < 0) return std::nullopt;
    return solver.recover(ubmask, end);
}

DpTable compute_dp_table(const Graph& g, const UnboundedAssignment& unbounded) {
    ExactOptions options;
    check_size(g, options);
    std::uint32_t ubmask = mask_of(unbounded, g.vertex_count());
    ExactSolver solver(g);
    solver.run(ubmask);
    return solver.table();
}

ExactResult solve_exact(const Graph& g, const ExactOptions& options) {
    check_size(g, options);
    const int n = g.vertex_count();
    if (n == 1) return {0, Walk{{0}}, UnboundedAssignment{}, 1};
    if (!is_connected(g)) throw std::invalid_argument("solve_exact: graph must be connected");

    std::uint32_t cutmask = 0;
    for (Vertex v : cut_vertices(g)) cutmask |= std::uint32_t{1} << v;

    const bool budgeted = options.time_budget.has_value();
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              options.time_budget.value_or(std::chrono::duration<double>(0)));

    ExactSolver solver(g);
    std::uint64_t tried = 0;
    const std::uint32_t limit = std::uint32_t{1} << n;

    for (int size = 0; size <= n; ++size) {
        std::uint32_t mask = (size == 0) ? 0 : (std::uint32_t{1} << size) - 1;
        while (true) {
            ++tried;
            if ((mask & cutmask) == cutmask) {
                if (budgeted && std::chrono::steady_clock::now() >= deadline)
                    throw BudgetExceededError(size, tried);
                int end = solver.run(mask);
                if (end >= 0) {
                    Walk walk = solver.recover(mask, end);
                    auto report = verify_walk(g, walk, WalkKind::cycle);
                    if (!report.valid)
                        throw std::logic_error("solve_exact produced an invalid walk");
                    return {size, std::move(walk), assignment_from_mask(mask), tried};
                }
            }
            if (size == 0) break;
            std::uint32_t c = mask & (0u - mask);
            std::uint32_t next = mask + c;
            std::uint32_t gosper = next ? ((((next ^ mask) >> 2) / c) | next) : limit;
            if (gosper >= limit) break;
            mask = gosper;
        }
    }
    throw std::logic_error("solve_exact: no feasible unbounded set found on a connected graph");
}

} // namespace khcp
