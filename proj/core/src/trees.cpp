#include "khcp/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "khcp/structure.hpp"

namespace khcp {
namespace {

void require_tree(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("input graph is not a tree");
}

// Euler tour of the subtree rooted at `root` whose parent is `parent`:
// emits root, recurses into each child, and re-emits the frame vertex after
// every child returns. Appends to `walk`; the caller owns the closing step.
void emit_subtree(const Graph& g, Vertex root, Vertex parent, std::vector<Vertex>& walk) {
    std::vector<std::pair<Vertex, size_t>> stack;
    std::vector<Vertex> parents{parent};
    stack.emplace_back(root, 0);
    walk.push_back(root);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        Vertex par = parents.back();
        const auto& nbrs = g.neighbors(v);
        while (idx < nbrs.size() && nbrs[idx] == par) ++idx;
        if (idx < nbrs.size()) {
            Vertex c = nbrs[idx++];
            parents.push_back(v);
            stack.emplace_back(c, 0);
            walk.push_back(c);
        } else {
            stack.pop_back();
            parents.pop_back();
            if (!stack.empty()) walk.push_back(stack.back().first);
        }
    }
}

UnboundedAssignment unmarked_vertices(const std::vector<char>& bounded) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < static_cast<Vertex>(bounded.size()); ++v)
        if (!bounded[v]) members.push_back(v);
    return UnboundedAssignment(std::move(members));
}

} // namespace

TreeSolution tree_cycle(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    if (n == 1) return {Walk{{0}}, UnboundedAssignment{}};

    std::vector<Vertex> walk;
    walk.reserve(2 * n);
    emit_subtree(tree, 0, -1, walk);
    walk.pop_back();  // drop the final return to the root so the ends differ

    std::vector<Vertex> internal;
    for (Vertex v = 0; v < n; ++v)
        if (tree.degree(v) >= 2) internal.push_back(v);

    TreeSolution solution{Walk{std::move(walk)}, UnboundedAssignment(std::move(internal))};
    if (!verify_walk(tree, solution.walk, WalkKind::cycle).valid)
        throw std::logic_error("tree_cycle produced an invalid walk");
    return solution;
}

TreeSolution tree_path(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    if (n == 1) return {Walk{{0}}, UnboundedAssignment{}};
    if (n == 2) return {Walk{{0, 1}}, UnboundedAssignment{}};

    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (tree.degree(v) >= 2) {
            root = v;
            break;
        }
    }

    // dp[v] = most bounded-eligible vertices (degree <= 2) on a downward path
    // starting at v, and the child realizing it. The best apex combines its
    // two best child branches.
    std::vector<int> dp_best(n, 0), dp_child(n, -1);
    int res = 0;
    Vertex apex = -1;
    int branch_a = -1, branch_b = -1;
    auto dpval = [&](int x) { return x < 0 ? 0 : dp_best[x]; };

    struct Frame {
        Vertex v;
        Vertex parent;
        size_t idx;
        int mf, ms;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1, 0, -1, -1});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbrs = tree.neighbors(f.v);
        if (f.idx < nbrs.size()) {
            Vertex w = nbrs[f.idx++];
            if (w == f.parent) continue;
            stack.push_back({w, f.v, 0, -1, -1});
            continue;
        }
        int bonus = tree.degree(f.v) <= 2 ? 1 : 0;
        dp_best[f.v] = dpval(f.mf) + bonus;
        dp_child[f.v] = f.mf;
        int val = dpval(f.mf) + dpval(f.ms) + bonus;
        if (val > res) {
            res = val;
            apex = f.v;
            branch_a = f.mf;
            branch_b = f.ms;
        }
        Vertex done = f.v;
        stack.pop_back();
        if (!stack.empty()) {
            Frame& pf = stack.back();
            if (dp_best[done] > dpval(pf.mf)) {
                pf.ms = pf.mf;
                pf.mf = done;
            } else if (dp_best[done] > dpval(pf.ms)) {
                pf.ms = done;
            }
        }
    }
    if (apex < 0 || branch_a < 0 || branch_b < 0)
        throw std::logic_error("tree_path found no two-branch apex on a tree with n >= 3");

    // Bounded vertices: all leaves, plus degree <= 2 vertices on the chosen
    // path (the apex and both branch chains).
    std::vector<char> bounded(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (tree.degree(v) == 1) bounded[v] = 1;
    if (tree.degree(apex) <= 2) bounded[apex] = 1;

    auto chain = [&](int top) {
        std::vector<Vertex> out;
        for (int x = top; x >= 0; x = dp_child[x]) out.push_back(x);
        return out;
    };
    std::vector<Vertex> chain_a = chain(branch_a);
    std::vector<Vertex> chain_b = chain(branch_b);
    for (const auto& c : {chain_a, chain_b})
        for (size_t i = 0; i + 1 < c.size(); ++i)  // chain ends are leaves, already bounded
            if (tree.degree(c[i]) <= 2) bounded[c[i]] = 1;

    std::vector<Vertex> path(chain_a.rbegin(), chain_a.rend());
    path.push_back(apex);
    path.insert(path.end(), chain_b.begin(), chain_b.end());

    std::vector<char> on_path(n, 0);
    for (Vertex v : path) on_path[v] = 1;

    // Walk from one end of the path to the other, finishing each off-path
    // subtree before stepping to the next path vertex.
    std::vector<Vertex> walk;
    walk.reserve(2 * n);
    for (Vertex v : path) {
        walk.push_back(v);
        for (Vertex w : tree.neighbors(v)) {
            if (on_path[w]) continue;
            emit_subtree(tree, w, v, walk);
            walk.push_back(v);
        }
    }

    TreeSolution solution{Walk{std::move(walk)}, unmarked_vertices(bounded)};
    auto report = verify_walk(tree, solution.walk, WalkKind::path);
    if (!report.valid || report.repeated != solution.unbounded.members())
        throw std::logic_error("tree_path produced an inconsistent walk");
    return solution;
}

} // namespace khcp
