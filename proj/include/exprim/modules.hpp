#pragma once

// MeatAxe-style module computations for matrix groups over GF(2).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exprim/gf2.hpp"

namespace exprim::modules {

/// Smallest subspace containing v and invariant under every generator.
gf2::Subspace spin(std::span<const gf2::Matrix> gens, const gf2::Vector& v);

struct MeatAxeOptions {
  std::uint64_t seed = 1;
  /// Longest generator word used in a random algebra element (first round).
  std::size_t max_word_length = 8;
  /// Candidates tried per round before the word length is doubled.
  std::size_t budget = 512;
  /// Rounds of word-length escalation.
  std::size_t rounds = 3;
  /// Modules of at most this dimension fall back to exhaustive spinning.
  std::size_t exhaustive_threshold = 14;
  /// Nullspaces up to this dimension are enumerated completely.
  std::size_t max_null_enumeration = 8;
};

enum class IrreducibilityMethod { trivial, norton, exhaustive };

struct IrreducibilityResult {
  bool irreducible = false;
  /// Proper nonzero invariant subspace when the module is reducible.
  std::optional<gf2::Subspace> witness;
  IrreducibilityMethod method = IrreducibilityMethod::trivial;
};

std::string to_string(IrreducibilityMethod m);

/// Norton irreducibility test with seeded random algebra elements; modules of
/// dimension <= options.exhaustive_threshold fall back to exhaustive spinning
/// when the random search is inconclusive. Throws ResourceError otherwise.
IrreducibilityResult is_irreducible(std::span<const gf2::Matrix> gens, const MeatAxeOptions& options = {});

/// Spins every nonzero vector; the reference oracle for small modules.
IrreducibilityResult is_irreducible_exhaustive(std::span<const gf2::Matrix> gens);

/// Action on an invariant subspace, in the coordinates of its echelon basis.
std::vector<gf2::Matrix> restrict_to_subspace(std::span<const gf2::Matrix> gens, const gf2::Subspace& sub);

/// Action on V/sub, in the basis given by the non-pivot standard vectors.
std::vector<gf2::Matrix> quotient_action(std::span<const gf2::Matrix> gens, const gf2::Subspace& sub);

/// Annihilator in V of a subspace of the dual space.
gf2::Subspace annihilator(const gf2::Subspace& dual_sub);

struct Constituent {
  std::size_t dim = 0;
  std::vector<gf2::Matrix> gens;
};

/// Composition factors, listed bottom-up along the series that was found.
std::vector<Constituent> chop(std::span<const gf2::Matrix> gens, const MeatAxeOptions& options = {});

}  // namespace exprim::modules
