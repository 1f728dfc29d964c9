#pragma once

#include <cstdint>
#include <random>

#include "khcp/graph.hpp"
#include "khcp/walk.hpp"

namespace khcp {

/// Uniform integer in [0, bound) drawn from rng by rejection sampling.
/// Unlike std::uniform_int_distribution the result is identical across
/// standard library implementations, which keeps seeded generation portable.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform random labeled tree on n >= 1 vertices (decoded from a random
/// Prufer sequence for n >= 3).
Graph gen_random_tree(int n, std::uint64_t seed);

/// Random connected graph: a uniform spanning tree plus distinct extra edges
/// chosen uniformly from the remaining non-edges until the edge count reaches
/// round(n * avg_degree / 2), rounded half up. Throws std::invalid_argument
/// when the budget is below n-1 or above n(n-1)/2, or n < 2.
Graph gen_random_connected(int n, double avg_degree, std::uint64_t seed);

/// Generalized Petersen graph G(n, k): outer cycle u_0..u_{n-1} (ids 0..n-1),
/// spokes u_i v_i, inner skip edges v_i v_{i+k mod n} (ids n..2n-1).
/// Requires 2 <= 2k < n, or the equatorial case 2k = n with 4 | n and n >= 8
/// in which the skip edges coincide in pairs (n/2 distinct inner edges).
Graph gen_generalized_petersen(int n, int k);

struct PetersenSolution {
    Walk walk;
    UnboundedAssignment unbounded;
};

/// Closed-form cycle walk for the equatorial Petersen graph G(n, n/2)
/// (n a multiple of 4, n >= 8). Chains n/2 four-vertex legs, each one
/// spoke-skip-spoke plus a rim step, into a Hamiltonian path, then closes it
/// with two rim revisits for n = 8 or a spoke-skip-spoke revisit otherwise.
/// Yields 2 repeated vertices for n = 8 and 3 for larger n.
PetersenSolution petersen_construction(int n);

} // namespace khcp
