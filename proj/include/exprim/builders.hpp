#pragma once

// Constructions of the matrix groups used throughout: classical groups on
// their natural modules, permutation and deleted permutation modules,
// semilinear groups, exterior powers and seeded subgroup searches.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exprim/groups.hpp"
#include "exprim/modules.hpp"

namespace exprim::groups {

/// 0-based images: point i maps to p[i].
using Permutation = std::vector<std::size_t>;

/// Permutation of n points from 1-based cycles.
Permutation permutation_from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);
bool is_permutation(const Permutation& p);

enum class ClassicalFamily { gl, sp, omega_plus, omega_minus, o_plus, o_minus };

ClassicalFamily parse_classical_family(std::string_view name);
std::string to_string(ClassicalFamily f);

/// Order formula for the family in the given dimension.
BigInt classical_order(ClassicalFamily f, std::size_t dim);

/// Quadratic form of the orthogonal families on F_2^{2m}: coordinates e_i = i,
/// f_i = m + i, Q = sum x_{e_i} x_{f_i}, plus x_{e_m}^2 + x_{f_m}^2 on the last
/// pair for the minus type.
bool quadratic_form(bool minus, std::size_t m, gf2::Word x);
/// The symplectic form polarising it: B(e_i, f_i) = 1.
bool symplectic_form(std::size_t m, gf2::Word x, gf2::Word y);

/// Generators of the family on its natural module, with the order attached.
/// gl: a transvection and the cyclic permutation matrix. sp: a product of
/// transvections along a chain of vectors and one transvection. Orthogonal
/// families: two products of reflections chosen by a seeded search inside the
/// reflection group and accepted only when their stabiliser-chain order
/// matches the formula. The plus-type orthogonal families are not offered in
/// dimension 4, where the reflections generate a proper subgroup.
MatrixGroup build_classical(ClassicalFamily f, std::size_t dim);

/// Permutation matrices of the given permutations.
MatrixGroup permutation_module(std::span<const Permutation> perms);

/// Action on (sum-zero subspace) / (all-ones line when n is even), in the
/// basis obtained from restrict_to_subspace and quotient_action.
MatrixGroup build_deleted_perm_module(std::span<const Permutation> perms);

struct SemilinearGroup {
  MatrixGroup group;
  bool r_prime = false;
  /// r is a primitive prime divisor of 2^d - 1.
  bool r_ppd = false;
};

/// <omega, phi> in GammaL_1(2^d) with omega of order r and phi: x -> x^{2^{d/e}}.
/// r must divide 2^d - 1 and e must divide d; primality of r is reported, not required.
SemilinearGroup build_semilinear(unsigned d, std::uint64_t r, unsigned e);

/// Action on the k-th exterior power, basis e_S for k-subsets S in
/// lexicographic order.
MatrixGroup exterior_power(const MatrixGroup& g, std::size_t k);

/// Random element: a seeded word of the given length in the generators.
gf2::Matrix random_element(const MatrixGroup& g, std::mt19937_64& rng, std::size_t length = 40);

/// Seeded search for a two-generated subgroup of the given order that also
/// satisfies `accept`. Returns nullopt after `attempts` failures.
std::optional<MatrixGroup> find_subgroup(const MatrixGroup& g, const BigInt& order, std::uint64_t seed,
                                         std::size_t attempts,
                                         const std::function<bool(const MatrixGroup&)>& accept = {});

/// Constituents of exactly the given dimension, in chop order.
std::vector<MatrixGroup> constituents_of_dim(const MatrixGroup& g, std::size_t dim,
                                             const modules::MeatAxeOptions& options = {});

}  // namespace exprim::groups
