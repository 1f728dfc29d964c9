#pragma once

#include <deque>
#include <limits>
#include <vector>

namespace khcp {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Shortest distances from `sources` over a state graph whose arc weights are
/// all 0 or 1. `expand` is called as expand(state, emit) and must invoke
/// emit(next_state, weight) for every outgoing arc; weight must be 0 or 1.
/// Zero-weight relaxations go to the front of the deque, unit-weight ones to
/// the back, so states are finalized in non-decreasing distance order and
/// each state is expanded at most once. Unreachable states get kUnreachable.
template <typename Expand>
std::vector<int> zero_one_bfs(int state_count, const std::vector<int>& sources, Expand&& expand) {
    std::vector<int> dist(state_count, kUnreachable);
    std::vector<char> done(state_count, 0);
    std::deque<int> queue;
    for (int s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (done[v]) continue;
        done[v] = 1;
        expand(v, [&](int next, int w) {
            if (dist[v] == kUnreachable) return;
            int nd = dist[v] + w;
            if (nd < dist[next]) {
                dist[next] = nd;
                if (w == 0)
                    queue.push_front(next);
                else
                    queue.push_back(next);
            }
        });
    }
    return dist;
}

} // namespace khcp
