#pragma once

// Finite matrix groups over GF(2): orders, element tables, prime-order classes.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "exprim/gf2.hpp"

namespace exprim::groups {

using BigInt = mpz_class;

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 26;

/// Enumeration cap: EXPRIM_CAP when set, otherwise kDefaultCap.
std::uint64_t default_cap();

/// A subgroup of GL_d(2) given by invertible generators.
class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(std::vector<gf2::Matrix> generators, std::optional<BigInt> order = std::nullopt,
              std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::vector<gf2::Matrix>& generators() const { return generators_; }
  const std::optional<BigInt>& order() const { return order_; }
  const std::string& name() const { return name_; }

  MatrixGroup with_order(BigInt order) const;
  MatrixGroup with_name(std::string name) const;

  friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) {
    return a.generators_ == b.generators_ && a.order_ == b.order_ && a.name_ == b.name_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<gf2::Matrix> generators_;
  std::optional<BigInt> order_;
  std::string name_;
};

/// Stabiliser chain relative to the base e_1, ..., e_d (the pointwise
/// stabiliser of a basis is trivial, so this base always suffices). Built by
/// deterministic Schreier-Sims; dimension is limited to 64.
class StabiliserChain {
 public:
  explicit StabiliserChain(std::span<const gf2::Matrix> generators, std::uint64_t max_points = 1U << 22);

  BigInt order() const;
  bool contains(const gf2::Matrix& g) const;
  std::size_t dim() const { return dim_; }
  /// Basic orbit lengths, one per base point.
  std::vector<std::size_t> orbit_lengths() const;

 private:
  struct Level {
    gf2::Word base = 0;
    std::vector<gf2::Matrix> gens;
    std::unordered_map<gf2::Word, std::size_t> index;
    std::vector<gf2::Word> points;
    std::vector<gf2::Matrix> reps;
    std::vector<gf2::Matrix> reps_inv;
  };

  void rebuild_orbit(Level& level);
  /// Sifts g from level `from`; returns residue and failing level.
  std::pair<gf2::Matrix, std::size_t> sift(gf2::Matrix g, std::size_t from) const;

  std::size_t dim_ = 0;
  std::uint64_t max_points_ = 0;
  std::uint64_t total_points_ = 0;
  std::vector<Level> levels_;
};

/// Exact order via the stabiliser chain (dimension <= 64).
BigInt chain_order(const MatrixGroup& g);

/// Every element of an enumerable group (dimension <= 16), stored packed.
/// Element 0 is the identity.
class ElementTable {
 public:
  static ElementTable enumerate(const MatrixGroup& g, std::uint64_t cap);

  std::size_t size() const { return count_; }
  std::size_t dim() const { return dim_; }
  gf2::Matrix element(std::size_t i) const;
  std::optional<std::size_t> find(const gf2::Matrix& m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t conjugate(std::size_t x, std::size_t by) const;
  std::uint64_t element_order(std::size_t i) const;
  std::size_t fixed_space_dim(std::size_t i) const;
  /// Rows of element i as words, for fast vector loops.
  void rows(std::size_t i, std::span<gf2::Word> out) const;

  /// Indices of the generators the table was enumerated from.
  const std::vector<std::size_t>& generator_indices() const { return generators_; }

  /// Order of the subgroup generated by the given elements (BFS inside the table).
  std::size_t subgroup_order(std::span<const std::size_t> gens) const;
  /// Orbit of x under conjugation by the generators, i.e. its conjugacy class.
  std::vector<std::size_t> conjugacy_class(std::size_t x) const;

 private:
  ElementTable() = default;
  void pack(std::span<const gf2::Word> rows, std::span<gf2::Word> key) const;
  void unpack(std::size_t i, std::span<gf2::Word> rows) const;
  std::uint64_t hash(std::span<const gf2::Word> key) const;
  std::optional<std::size_t> lookup(std::span<const gf2::Word> key) const;
  std::size_t insert(std::span<const gf2::Word> key);
  void grow();
  std::size_t index_of_rows(std::span<const gf2::Word> rows) const;

  std::size_t dim_ = 0;
  std::size_t words_ = 0;
  std::size_t count_ = 0;
  std::vector<gf2::Word> data_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> generator_inverses_;
};

/// Exact order by breadth-first closure; throws ResourceError above `cap`.
BigInt group_order(const MatrixGroup& g, std::uint64_t cap);

struct ClassRecord {
  std::string label;
  std::uint64_t element_order = 0;
  BigInt class_size;
  std::size_t fix_dim = 0;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// Prime-order conjugacy classes with fixed-space dimensions, plus an
/// exponent h with |H| <= 2^h.
struct ClassData {
  std::size_t dim = 0;
  mpq_class order_exponent_bound;
  std::vector<ClassRecord> records;
  friend bool operator==(const ClassData&, const ClassData&) = default;
};

ClassData prime_order_class_data(const MatrixGroup& g, std::uint64_t cap);
ClassData prime_order_class_data(const ElementTable& table);

/// Smallest t with |G| <= 2^t.
std::size_t log2_ceil(const BigInt& n);

bool is_prime(std::uint64_t n);

/// Minimal number of conjugates of x generating G, or nullopt when even the
/// whole class generates a proper subgroup. G must be simple and enumerable.
std::optional<std::size_t> alpha_bruteforce(const MatrixGroup& g, const gf2::Matrix& x, std::uint64_t cap);
std::optional<std::size_t> alpha_bruteforce(const ElementTable& table, std::size_t x);

/// True when the enumerated group has no proper nontrivial normal subgroup.
bool is_simple(const ElementTable& table);

}  // namespace exprim::groups
