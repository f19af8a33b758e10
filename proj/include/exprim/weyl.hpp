#pragma once

// Weyl orbit sizes of 2-restricted weights in type A and the dimension floor
// for graph-symmetric weights.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace exprim::weyl {

using BigInt = mpz_class;

/// sum c_i lambda_i with every c_i in {0, 1}, rank ell = coeffs.size().
struct Weight {
  std::vector<std::uint8_t> coeffs;

  /// "010000010" for lambda_2 + lambda_8 at rank 9.
  static Weight parse(std::size_t ell, std::string_view bits);
  std::size_t ell() const { return coeffs.size(); }
  bool is_trivial() const;
  /// Invariant under the diagram flip: c_i = c_{ell+1-i}.
  bool is_unitary_symmetric() const;
  /// The orthogonal-type constraint c_{ell-1} = c_ell.
  bool satisfies_orthogonal_constraint() const;
  std::string to_string() const;
};

/// |W : W_lambda| for W = Sym_{ell+1}: (ell+1)! over the product of (m+1)!
/// for the maximal runs of m consecutive zero coefficients.
BigInt weyl_orbit_size(const Weight& w);

/// (ell+1)! / (k! k! (ell-2k+1)!)
BigInt symmetric_pair_bound(std::size_t ell, std::size_t k);

struct FloorReport {
  std::size_t ell = 0;
  /// (k, bound) for 2 <= k < (ell+1)/2.
  std::vector<std::pair<std::size_t, BigInt>> bounds;
  std::size_t minimal_k = 0;
  BigInt floor;
  /// floor == ell(ell^2-1)(ell-2)/4
  bool floor_matches_closed_form = false;
  /// Symmetric weights were enumerated (ell <= 13).
  bool exhaustive = false;
  std::size_t weights_checked = 0;
  /// Non-exempt symmetric weights whose orbit lies below the floor.
  std::vector<Weight> violations;
  bool passed() const { return minimal_k == 2 && floor_matches_closed_form && violations.empty(); }
};

inline constexpr std::size_t kExhaustiveFloorLimit = 13;

/// The floor over the pair bounds and, for ell <= 13, an exhaustive check that
/// every symmetric weight other than lambda_1 + lambda_ell and (ell odd) the
/// middle weight has orbit size at least the floor. Requires ell >= 9.
FloorReport unitary_dim_floor_check(std::size_t ell);

}  // namespace exprim::weyl
