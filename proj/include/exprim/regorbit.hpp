#pragma once

// Regular orbits: exact detection, the fixed-space covering oracle, the
// class-counting bound and the alpha criterion.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "exprim/action.hpp"
#include "exprim/bounds.hpp"
#include "exprim/groups.hpp"

namespace exprim::regorbit {

using groups::BigInt;
using Rational = mpq_class;

struct RegularOrbitResult {
  bool exists = false;
  /// Least vector of the first regular orbit.
  std::optional<gf2::Word> witness;
};

/// Some orbit on nonzero vectors has size |G|. Requires a known order.
RegularOrbitResult regular_orbit_exact(const groups::MatrixGroup& g);
RegularOrbitResult regular_orbit_exact(const groups::MatrixGroup& g, const action::OrbitDecomposition& orbits);

/// Every nonzero vector is fixed by some element of prime order. Marks the
/// fixed spaces C_V(x) of all prime-order elements in a bitmap.
bool fixed_space_cover(const groups::MatrixGroup& g, std::uint64_t cap);
bool fixed_space_cover(const groups::ElementTable& table);

enum class CountingVerdict { regular_orbit_certified, inconclusive };
std::string to_string(CountingVerdict v);

/// Certified iff 2^d > sum over classes of |x^G| 2^{dim C_V(x)}.
CountingVerdict counting_bound(const groups::ClassData& data, std::size_t d);

/// Generic classes: together at most 2^{exponent} elements, each fixing at
/// most (1 - 1/alpha) d dimensions.
struct AlphaProfile {
  Rational alpha;
  std::optional<Rational> count_exponent;  // defaults to the group-order exponent
};

/// Classes with an exact element count.
struct SpecialClass {
  Rational alpha;
  BigInt count;
};

/// Certified iff 2^d > sum 2^{e + (1 - 1/alpha) d} + sum c 2^{(1 - 1/alpha) d}.
CountingVerdict alpha_criterion(const Rational& h_exp, std::span<const AlphaProfile> profile,
                                std::span<const SpecialClass> special, const Rational& d);

enum class LemmaVerdict { not_ep, no_conclusion };
std::string to_string(LemmaVerdict v);

/// A regular orbit makes the trivial subgroup a point stabiliser of the
/// action of G on that orbit; unless the trivial subgroup is maximal (|G|
/// prime), the orbit action is imprimitive. The almost-simple flag is
/// recorded by callers but does not change the argument.
LemmaVerdict not_ep_from_regular_orbit(const groups::MatrixGroup& g, bool almost_simple);

}  // namespace exprim::regorbit
