#pragma once

// Orbits on nonzero vectors, primitivity of the orbit actions, and the
// extreme-primitivity decision for affine groups V:H.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exprim/groups.hpp"
#include "exprim/modules.hpp"

namespace exprim::action {

inline constexpr std::size_t kMaxOrbitDim = 26;
/// Primitivity is not attempted on larger orbits.
inline constexpr std::size_t kMaxPrimitivityPoints = std::size_t{1} << 16;

/// Worker threads: EXPRIM_THREADS when set, otherwise the hardware count.
unsigned default_threads();

/// Vectors are indexed by their coordinate bit pattern (coordinate i is bit i).
struct OrbitDecomposition {
  std::size_t dim = 0;
  /// orbit_of[v] for 1 <= v < 2^dim; entry 0 is unused.
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint64_t> sizes;
  /// Least vector of each orbit; labels are ordered by it.
  std::vector<gf2::Word> representatives;

  std::size_t count() const { return sizes.size(); }
  /// Members of an orbit in increasing order.
  std::vector<gf2::Word> members(std::size_t label) const;
};

OrbitDecomposition orbits_on_nonzero(const groups::MatrixGroup& g);

/// Generator images on a sorted point set, as permutations of 0..n-1.
std::vector<std::vector<std::uint32_t>> orbit_action(const groups::MatrixGroup& g, std::span<const gf2::Word> orbit);

struct PrimitivityResult {
  bool primitive = true;
  /// The minimal nontrivial block through the least point, when imprimitive.
  std::vector<gf2::Word> block;
};

/// Primitivity of G on one orbit (sorted, as produced by members()). For the
/// least point a and every other point b, the finest G-congruence joining a
/// and b is built by union-find; the action is primitive exactly when each of
/// these is universal. Orbits of size 1 or of prime size are primitive.
PrimitivityResult is_primitive_on_orbit(const groups::MatrixGroup& g, std::span<const gf2::Word> orbit,
                                        unsigned threads = 0);

enum class EPReason { not_irreducible, imprimitive_orbit, all_orbits_primitive };
std::string to_string(EPReason r);

struct OrbitReport {
  std::size_t label = 0;
  std::uint64_t size = 0;
  gf2::Word representative = 0;
  bool primitive = true;
  std::size_t block_size = 0;  // 0 when primitive
  std::optional<groups::BigInt> stabiliser_order;
};

struct EPVerdict {
  bool is_ep = false;
  EPReason reason = EPReason::not_irreducible;
  modules::IrreducibilityMethod irreducibility_method = modules::IrreducibilityMethod::trivial;
  /// Orbits examined, in label order; stops at the first imprimitive one.
  std::vector<OrbitReport> per_orbit;
  std::size_t orbit_count = 0;
  std::optional<std::size_t> failing_orbit;
};

struct EPOptions {
  modules::MeatAxeOptions meataxe;
  unsigned threads = 0;  // 0: default_threads()
};

EPVerdict is_extremely_primitive(const groups::MatrixGroup& g, const EPOptions& options = {});

}  // namespace exprim::action
