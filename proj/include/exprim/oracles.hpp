#pragma once

// Independent reference computations used to cross-check the main routes.
// Each one is deliberately naive and limited to small inputs.

#include <cstdint>
#include <vector>

#include "exprim/weyl.hpp"

namespace exprim::oracles {

using Perms = std::vector<std::vector<std::uint32_t>>;

/// Higman's criterion: a transitive group is primitive iff every orbital
/// graph other than the diagonal is connected. Requires n <= 60.
bool primitive_by_orbital_graphs(const Perms& gens, std::size_t n);

/// Tries every subset through point 0 whose size properly divides n and
/// checks whether its images under the group are pairwise equal or
/// disjoint. Requires n <= 16.
bool primitive_by_block_enumeration(const Perms& gens, std::size_t n);

/// Transitive on ordered pairs of distinct points. Requires n <= 2048.
bool is_two_transitive(const Perms& gens, std::size_t n);

/// Size of the Sym_{ell+1}-orbit of the weight written in epsilon
/// coordinates a_j = sum_{i >= j} c_i, by explicit enumeration of all
/// permutations. Requires ell <= 8.
std::uint64_t weyl_orbit_bruteforce(const weyl::Weight& w);

}  // namespace exprim::oracles
