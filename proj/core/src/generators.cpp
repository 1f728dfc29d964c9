#include "khcp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace khcp {

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_rand: bound must be positive");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

// Standard Prufer decode: degree of v is 1 + multiplicity in the sequence.
// Vertex n-1 is never consumed as a leaf and takes the final edge.
std::vector<Edge> decode_prufer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (ptr < n && degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

} // namespace

Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_tree: n must be >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});

    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(bounded_rand(rng, n));
    return Graph::from_edges(n, decode_prufer(seq, n));
}

Graph gen_random_connected(int n, double avg_degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_connected: n must be >= 2");
    long long target = std::llround(n * avg_degree / 2.0);
    long long capacity = static_cast<long long>(n) * (n - 1) / 2;
    if (target < n - 1)
        throw std::invalid_argument("gen_random_connected: edge budget " + std::to_string(target) +
                                    " below the " + std::to_string(n - 1) +
                                    " needed for connectivity");
    if (target > capacity)
        throw std::invalid_argument("gen_random_connected: edge budget " + std::to_string(target) +
                                    " exceeds " + std::to_string(capacity));

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    if (n == 2) {
        edges = {{0, 1}};
    } else {
        std::vector<int> seq(n - 2);
        for (int& x : seq) x = static_cast<int>(bounded_rand(rng, n));
        edges = decode_prufer(seq, n);
    }

    std::set<Edge> present(edges.begin(), edges.end());
    long long extra = target - (n - 1);

    if (extra > 0 && target * 2 < capacity) {
        // Sparse case: rejection-sample absent pairs.
        while (static_cast<long long>(present.size()) < target) {
            Vertex u = static_cast<Vertex>(bounded_rand(rng, n));
            Vertex v = static_cast<Vertex>(bounded_rand(rng, n));
            if (u == v) continue;
            Edge e{std::min(u, v), std::max(u, v)};
            if (present.insert(e).second) edges.push_back(e);
        }
    } else if (extra > 0) {
        // Dense case: enumerate the complement and draw without replacement.
        std::vector<Edge> pool;
        pool.reserve(static_cast<size_t>(capacity - (n - 1)));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!present.count({u, v})) pool.push_back({u, v});
        for (long long i = 0; i < extra; ++i) {
            size_t j = i + bounded_rand(rng, pool.size() - i);
            std::swap(pool[i], pool[j]);
            edges.push_back(pool[i]);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_generalized_petersen(int n, int k) {
    bool standard = 2 <= 2 * k && 2 * k < n;
    bool equatorial = 2 * k == n && n >= 8 && n % 4 == 0;
    if (!standard && !equatorial)
        throw std::invalid_argument("gen_generalized_petersen: require 2 <= 2k < n, or 2k = n with 4 | n and n >= 8 (got n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) + ")");

    std::set<Edge> edges;
    auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (int i = 0; i < n; ++i) {
        add(i, (i + 1) % n);              // outer cycle
        add(i, n + i);                    // spoke
        add(n + i, n + (i + k) % n);      // inner skip; pairs coincide when 2k = n
    }
    return Graph::from_edges(2 * n, std::vector<Edge>(edges.begin(), edges.end()));
}

PetersenSolution petersen_construction(int n) {
    if (n < 8 || n % 4 != 0)
        throw std::invalid_argument("petersen_construction: n must be a multiple of 4, at least 8 (got " +
                                    std::to_string(n) + ")");
    const int h = n / 2;
    auto outer = [&](int i) { return (i % n + n) % n; };
    auto inner = [&](int i) { return n + (i % n + n) % n; };

    // n/2 legs, leg t based at t*(h+1) mod n (the bases are distinct because
    // h+1 is odd and coprime to n): spoke down, skip across, spoke up, rim
    // step to the next base. The last leg skips the rim step, leaving a
    // Hamiltonian path from u_0 to u_{h-1}.
    std::vector<Vertex> walk;
    walk.reserve(2 * n + 3);
    for (int t = 0; t < h; ++t) {
        int base = t * (h + 1) % n;
        walk.push_back(outer(base));
        walk.push_back(inner(base));
        walk.push_back(inner(base + h));
        walk.push_back(outer(base + h));
    }

    std::vector<Vertex> repeats;
    if (n == 8) {
        // u_3 u_2 u_1 closes onto u_0 along the rim.
        walk.push_back(outer(2));
        walk.push_back(outer(1));
        repeats = {outer(1), outer(2)};
    } else {
        // Revisit v_{h-1}, cross to v_{n-1}, and surface at u_{n-1}, a rim
        // neighbor of the start.
        walk.push_back(inner(h - 1));
        walk.push_back(inner(n - 1));
        walk.push_back(outer(n - 1));
        repeats = {outer(n - 1), inner(h - 1), inner(n - 1)};
    }

    PetersenSolution solution{Walk{std::move(walk)}, UnboundedAssignment(std::move(repeats))};
    auto report = verify_walk(gen_generalized_petersen(n, h), solution.walk, WalkKind::cycle,
                              solution.unbounded);
    if (!report.valid)
        throw std::logic_error("petersen_construction produced an invalid walk");
    return solution;
}

} // namespace khcp
