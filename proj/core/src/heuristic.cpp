#include "khcp/heuristic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>

#include "khcp/structure.hpp"

namespace khcp {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

void mark_repeats(SearchState& st, int n) {
    std::vector<int> cnt(n, 0);
    for (Vertex v : st.path) ++cnt[v];
    for (Vertex v = 0; v < n; ++v)
        if (cnt[v] >= 2) st.unbounded[v] = 1;
}

// Installs the winning arrangement and marks its repeats unbounded. Only the
// committed path's revisits become marks; discarded search states leave none.
void commit(SearchState& st, std::vector<Vertex> winner, int n) {
    st.path = std::move(winner);
    mark_repeats(st, n);
}

CycleCheck cycle_check_impl(const Graph& g, std::vector<Vertex>& v,
                            const std::vector<char>& visited, const std::vector<int>& ud,
                            bool is_last, SolveCounters& counters) {
    const size_t sz = v.size();
    const Vertex s = v.front();
    for (size_t i = 1; i + 1 < sz; ++i) {
        if (g.has_edge(v[i], v.back()) && g.has_edge(s, v[i + 1])) {
            std::reverse(v.begin() + i + 1, v.end());
            ++counters.rotations_applied;
            break;
        }
    }
    if (!g.has_edge(s, v.back())) return {CycleCheckResult::no_cycle, -1};
    if (is_last) return {CycleCheckResult::closed, -1};

    // The path is now a cycle; pick the unvisited neighbor with the fewest
    // unvisited neighbors of its own and rotate its attachment point to the
    // back so the greedy extension can continue.
    Vertex nv = -1;
    size_t pos = 0;
    int best = kInf;
    for (size_t i = 0; i < sz; ++i) {
        for (Vertex w : g.neighbors(v[i])) {
            if (visited[w]) continue;
            if (ud[w] < best) {
                best = ud[w];
                nv = w;
                pos = i;
            }
        }
    }
    if (nv < 0) return {CycleCheckResult::stuck, -1};
    std::reverse(v.begin(), v.begin() + pos);
    std::reverse(v.begin() + pos, v.end());
    ++counters.rotations_applied;
    return {CycleCheckResult::extend, nv};
}

// 0-1 BFS over single-endpoint arrangements; see the header comment on
// reroute() for the contract.
Vertex reroute_impl(const Graph& g, SearchState& st, bool is_last, std::int64_t& budget,
                    size_t max_len) {
    const int n = g.vertex_count();
    ++st.counters.reroute_calls;
    std::vector<int> dist(n, kInf);
    std::vector<char> done(n, 0);
    std::vector<std::vector<Vertex>> dpath(n);
    const Vertex f0 = st.path.front();
    const Vertex l0 = st.path.back();
    dist[f0] = 0;
    dpath[f0] = st.path;
    done[f0] = 1;  // already an endpoint; never expanded, never relaxed
    dist[l0] = 0;
    dpath[l0] = st.path;
    std::deque<Vertex> q{l0};

    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (!is_last && st.unvisited_degree[v] > 0) {
            commit(st, dpath[v], n);
            return v;
        }
        if (done[v]) continue;
        done[v] = 1;
        if (--budget < 0) throw SearchStuckError("reroute: state budget exhausted");
        ++st.counters.bfs_states_expanded;

        const int dcur = dist[v];
        std::vector<Vertex> cur = dpath[v];
        CycleCheck cc = cycle_check_impl(g, cur, st.visited, st.unvisited_degree, is_last,
                                         st.counters);
        if (cc.result == CycleCheckResult::closed) {
            commit(st, std::move(cur), n);
            return -1;
        }
        if (cc.result == CycleCheckResult::extend) {
            commit(st, std::move(cur), n);
            return st.path.back();
        }

        const size_t sz = cur.size();
        const Vertex F = cur.front();
        const Vertex L = cur.back();
        const bool room = sz < max_len;
        for (size_t i = 1; i + 1 < sz; ++i) {
            const Vertex nv = cur[i];
            if (dcur < dist[nv]) {
                if (st.unbounded[nv] && room) {  // free revisit of an unbounded vertex
                    if (!is_last && g.has_edge(F, nv)) {
                        std::vector<Vertex> np;
                        np.reserve(sz + 1);
                        np.push_back(nv);
                        np.insert(np.end(), cur.begin(), cur.end());
                        dist[nv] = dcur;
                        dpath[nv] = std::move(np);
                        q.push_front(nv);
                        continue;
                    }
                    if (g.has_edge(nv, L)) {
                        std::vector<Vertex> np = cur;
                        np.push_back(nv);
                        dist[nv] = dcur;
                        dpath[nv] = std::move(np);
                        q.push_front(nv);
                        continue;
                    }
                }
                if (i >= 2 && g.has_edge(cur[i - 1], L)) {  // rotate about the back
                    std::vector<Vertex> np = cur;
                    std::reverse(np.begin() + i, np.end());
                    dist[nv] = dcur;
                    dpath[nv] = std::move(np);
                    q.push_front(nv);
                    ++st.counters.rotations_applied;
                    continue;
                }
                if (!is_last && i + 2 < sz && g.has_edge(cur[i + 1], F)) {  // about the front
                    std::vector<Vertex> np = cur;
                    std::reverse(np.begin(), np.begin() + i + 1);
                    dist[nv] = dcur;
                    dpath[nv] = std::move(np);
                    q.push_front(nv);
                    ++st.counters.rotations_applied;
                    continue;
                }
            }
            if (dcur + 1 < dist[nv] && room) {  // revisit a bounded vertex, marking it
                if (!is_last && g.has_edge(F, nv)) {
                    std::vector<Vertex> np(cur.rbegin(), cur.rend());
                    np.push_back(nv);
                    dist[nv] = dcur + 1;
                    dpath[nv] = std::move(np);
                    q.push_back(nv);
                } else if (g.has_edge(nv, L)) {
                    std::vector<Vertex> np = cur;
                    np.push_back(nv);
                    dist[nv] = dcur + 1;
                    dpath[nv] = std::move(np);
                    q.push_back(nv);
                }
            }
        }
    }
    throw SearchStuckError(is_last ? "reroute: no closing arrangement found"
                                   : "reroute: no extendable arrangement found");
}

struct PairEntry {
    int dist = kInf;
    bool done = false;
    std::vector<Vertex> path;
};

// 0-1 BFS over unordered endpoint pairs; see path_to_cycle() in the header.
void path_to_cycle_impl(const Graph& g, SearchState& st, std::int64_t& budget,
                        size_t max_len) {
    const int n = g.vertex_count();
    auto key = [n](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * n + b;
    };
    std::unordered_map<std::uint64_t, PairEntry> states;
    std::deque<std::pair<Vertex, Vertex>> q;
    auto entry_dist = [&](Vertex a, Vertex b) {
        auto it = states.find(key(a, b));
        return it == states.end() ? kInf : it->second.dist;
    };
    auto record = [&](Vertex a, Vertex b, int d, std::vector<Vertex> np, bool zero_cost) {
        PairEntry& e = states[key(a, b)];
        e.dist = d;
        e.path = std::move(np);
        if (zero_cost)
            q.emplace_front(a, b);
        else
            q.emplace_back(a, b);
    };

    {
        PairEntry& seed = states[key(st.path.front(), st.path.back())];
        seed.dist = 0;
        seed.path = st.path;
        q.emplace_front(st.path.front(), st.path.back());
    }

    while (!q.empty()) {
        auto [qa, qb] = q.front();
        q.pop_front();
        PairEntry& ent = states[key(qa, qb)];
        if (ent.done) continue;
        ent.done = true;
        if (--budget < 0) throw SearchStuckError("path_to_cycle: state budget exhausted");
        ++st.counters.bfs_states_expanded;

        const int dcur = ent.dist;
        std::vector<Vertex> cur = ent.path;
        CycleCheck cc =
            cycle_check_impl(g, cur, st.visited, st.unvisited_degree, true, st.counters);
        if (cc.result == CycleCheckResult::closed) {
            commit(st, std::move(cur), n);
            return;
        }

        const size_t sz = cur.size();
        const Vertex F = cur.front();
        const Vertex L = cur.back();
        const bool room = sz < max_len;

        if (room) {  // free revisits of unbounded vertices
            for (size_t i = 1; i + 1 < sz; ++i) {
                const Vertex nv = cur[i];
                if (!st.unbounded[nv]) continue;
                if (g.has_edge(F, nv) && dcur < entry_dist(L, nv)) {
                    std::vector<Vertex> np;
                    np.reserve(sz + 1);
                    np.push_back(nv);
                    np.insert(np.end(), cur.begin(), cur.end());
                    record(L, nv, dcur, std::move(np), true);
                } else if (g.has_edge(nv, L) && dcur < entry_dist(F, nv)) {
                    std::vector<Vertex> np = cur;
                    np.push_back(nv);
                    record(F, nv, dcur, std::move(np), true);
                }
            }
        }
        for (size_t i = 2; i + 1 < sz; ++i) {  // rotations about the back
            const Vertex nv = cur[i];
            if (g.has_edge(cur[i - 1], L) && dcur < entry_dist(F, nv)) {
                std::vector<Vertex> np = cur;
                std::reverse(np.begin() + i, np.end());
                record(F, nv, dcur, std::move(np), true);
                ++st.counters.rotations_applied;
            }
        }
        for (size_t i = 1; i + 2 < sz; ++i) {  // rotations about the front
            const Vertex nv = cur[i];
            if (g.has_edge(cur[i + 1], F) && dcur < entry_dist(L, nv)) {
                std::vector<Vertex> np = cur;
                std::reverse(np.begin(), np.begin() + i + 1);
                record(L, nv, dcur, std::move(np), true);
                ++st.counters.rotations_applied;
            }
        }
        if (room) {  // unit-cost revisits of bounded vertices
            for (size_t i = 1; i + 1 < sz; ++i) {
                const Vertex nv = cur[i];
                if (st.unbounded[nv]) continue;
                if (g.has_edge(F, nv) && dcur + 1 < entry_dist(L, nv)) {
                    std::vector<Vertex> np;
                    np.reserve(sz + 1);
                    np.push_back(nv);
                    np.insert(np.end(), cur.begin(), cur.end());
                    record(L, nv, dcur + 1, std::move(np), false);
                } else if (g.has_edge(nv, L) && dcur + 1 < entry_dist(F, nv)) {
                    std::vector<Vertex> np = cur;
                    np.push_back(nv);
                    record(F, nv, dcur + 1, std::move(np), false);
                }
            }
        }
    }
    throw SearchStuckError("path_to_cycle: no closing arrangement found");
}

} // namespace

CycleCheck preemptive_cycle_check(const Graph& g, std::vector<Vertex>& path,
                                  const std::vector<char>& visited,
                                  const std::vector<int>& unvisited_degree, bool is_last) {
    if (path.empty())
        throw std::invalid_argument("preemptive_cycle_check: empty path");
    SolveCounters scratch;
    return cycle_check_impl(g, path, visited, unvisited_degree, is_last, scratch);
}

SearchState make_search_state(const Graph& g, std::vector<Vertex> path,
                              const std::vector<Vertex>& unbounded) {
    const int n = g.vertex_count();
    if (path.empty()) throw std::invalid_argument("make_search_state: empty path");
    for (Vertex v : path)
        if (v < 0 || v >= n)
            throw std::invalid_argument("make_search_state: path vertex out of range");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("make_search_state: consecutive vertices not adjacent");

    SearchState st;
    st.visited.assign(n, 0);
    for (Vertex v : path) st.visited[v] = 1;
    st.unvisited_degree.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        int c = 0;
        for (Vertex w : g.neighbors(v)) c += !st.visited[w];
        st.unvisited_degree[v] = c;
    }
    st.unbounded.assign(n, 0);
    for (Vertex v : unbounded) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("make_search_state: unbounded vertex out of range");
        st.unbounded[v] = 1;
    }
    st.path = std::move(path);
    return st;
}

Vertex reroute(const Graph& g, SearchState& state, bool is_last, std::int64_t state_budget) {
    return reroute_impl(g, state, is_last, state_budget,
                        std::numeric_limits<size_t>::max());
}

void path_to_cycle(const Graph& g, SearchState& state, std::int64_t state_budget) {
    path_to_cycle_impl(g, state, state_budget, std::numeric_limits<size_t>::max());
}

HeuristicResult solve_heuristic(const Graph& g, HeuristicMode mode,
                                const HeuristicConfig& config) {
    const int n = g.vertex_count();
    if (!is_connected(g))
        throw std::invalid_argument("solve_heuristic: graph must be connected");
    if (n == 1) return {Walk{{0}}, UnboundedAssignment{}, 0, SolveCounters{}};
    if (n == 2) return {Walk{{0, 1}}, UnboundedAssignment{}, 0, SolveCounters{}};

    Vertex start = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    SearchState st = make_search_state(g, {start}, cut_vertices(g));

    std::int64_t budget =
        static_cast<std::int64_t>(config.state_ceiling_factor) * n * n;
    const size_t max_len = static_cast<size_t>(config.cap_factor) * n;
    int visited_count = 1;
    while (visited_count < n) {
        if (st.path.size() > max_len)
            throw SearchStuckError("solve_heuristic: walk length cap exceeded");
        const Vertex back = st.path.back();
        Vertex next = -1;
        for (Vertex w : g.neighbors(back))
            if (!st.visited[w] &&
                (next == -1 || st.unvisited_degree[w] < st.unvisited_degree[next]))
                next = w;
        if (next != -1) {
            st.path.push_back(next);
            st.visited[next] = 1;
            for (Vertex u : g.neighbors(next)) --st.unvisited_degree[u];
            ++visited_count;
            continue;
        }
        const Vertex front = st.path.front();
        bool front_alive = false;
        for (Vertex w : g.neighbors(front))
            if (!st.visited[w]) {
                front_alive = true;
                break;
            }
        if (front_alive) {
            std::reverse(st.path.begin(), st.path.end());
            continue;
        }
        reroute_impl(g, st, false, budget, max_len);
    }

    if (st.path.front() == st.path.back() ||
        !g.has_edge(st.path.front(), st.path.back())) {
        if (mode == HeuristicMode::full)
            path_to_cycle_impl(g, st, budget, max_len);
        else
            reroute_impl(g, st, true, budget, max_len);
    }

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
        if (st.unbounded[v]) members.push_back(v);
    HeuristicResult result{Walk{std::move(st.path)},
                           UnboundedAssignment(std::move(members)), 0, st.counters};
    result.k = static_cast<int>(result.unbounded.size());
    auto report = verify_walk(g, result.walk, WalkKind::cycle, result.unbounded);
    if (!report.valid || report.repeated != result.unbounded.members())
        throw std::logic_error("solve_heuristic produced an inconsistent walk");
    return result;
}

} // namespace khcp
