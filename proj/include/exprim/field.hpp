#pragma once

// The field with 2^d elements as F_2[t]/(f), d <= 32. An element is the word
// whose bit i is the coefficient of t^i.

#include <cstdint>

#include "exprim/gf2.hpp"

namespace exprim::field {

/// Lexicographically least primitive polynomial of degree d (least as an
/// integer with bit i the coefficient of t^i), 1 <= d <= 24, from the bundled table.
std::uint64_t primitive_polynomial(unsigned d);

/// Same polynomial found by direct search; the oracle for the table.
std::uint64_t search_primitive_polynomial(unsigned d);

/// True when f (degree d = highest set bit) is irreducible with t of order 2^d - 1.
bool is_primitive_polynomial(std::uint64_t f);

class Field {
 public:
  explicit Field(unsigned d);
  Field(unsigned d, std::uint64_t modulus);

  unsigned degree() const { return d_; }
  std::uint64_t modulus() const { return f_; }
  std::uint64_t order() const { return (std::uint64_t{1} << d_) - 1; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  /// Matrix of x -> a*x on the basis 1, t, ..., t^{d-1}.
  gf2::Matrix multiplication_matrix(std::uint64_t a) const;
  /// Matrix of x -> x^{2^k}.
  gf2::Matrix frobenius_matrix(unsigned k) const;

 private:
  unsigned d_;
  std::uint64_t f_;
};

/// Multiplicative order of 2 modulo an odd r > 1.
unsigned order_of_two_mod(std::uint64_t r);

}  // namespace exprim::field
