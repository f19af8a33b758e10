#include "exprim/field.hpp"

#include <array>
#include <bit>
#include <vector>

#include "exprim/error.hpp"

namespace exprim::field {

namespace {

constexpr std::array<std::uint64_t, 25> kPrimitive = {
    0,       0x3,      0x7,      0xb,      0x13,     0x25,     0x43,     0x83,     0x11d,
    0x211,   0x409,    0x805,    0x1053,   0x201b,   0x402b,   0x8003,   0x1002d,  0x20009,
    0x40027, 0x80027,  0x100009, 0x200005, 0x400003, 0x800021, 0x100001b};

unsigned degree_of(std::uint64_t f) { return f == 0 ? 0 : 63 - std::countl_zero(f); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned d) {
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << d;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= f;
  }
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t f, unsigned d) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, f, d);
    a = mulmod(a, a, f, d);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_primitive_polynomial(std::uint64_t f) {
  const unsigned d = degree_of(f);
  if (d == 0 || d > 32) return false;
  if (d == 1) return f == 0x3;
  if ((f & 1U) == 0) return false;
  const std::uint64_t n = (std::uint64_t{1} << d) - 1;
  // t has order exactly n in (F_2[t]/f)^*, which forces f irreducible
  if (powmod(2, n, f, d) != 1) return false;
  for (const std::uint64_t q : prime_factors(n)) {
    if (powmod(2, n / q, f, d) == 1) return false;
  }
  return true;
}

std::uint64_t search_primitive_polynomial(unsigned d) {
  if (d == 0 || d > 32) throw DomainError("primitive polynomial degree must be in 1..32");
  for (std::uint64_t f = std::uint64_t{1} << d; f < (std::uint64_t{2} << d); ++f) {
    if (is_primitive_polynomial(f)) return f;
  }
  throw DomainError("no primitive polynomial found");
}

std::uint64_t primitive_polynomial(unsigned d) {
  if (d == 0 || d >= kPrimitive.size()) throw DomainError("bundled primitive polynomials cover degrees 1..24");
  return kPrimitive[d];
}

Field::Field(unsigned d) : Field(d, d < kPrimitive.size() ? primitive_polynomial(d) : search_primitive_polynomial(d)) {}

Field::Field(unsigned d, std::uint64_t modulus) : d_(d), f_(modulus) {
  if (d == 0 || d > 32) throw DomainError("field degree must be in 1..32");
  if (degree_of(modulus) != d) throw DomainError("modulus degree does not match the field degree");
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, f_, d_); }

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, f_, d_); }

gf2::Matrix Field::multiplication_matrix(std::uint64_t a) const {
  gf2::Matrix m(d_);
  for (unsigned i = 0; i < d_; ++i) {
    const std::uint64_t image = mul(std::uint64_t{1} << i, a);
    for (unsigned c = 0; c < d_; ++c) m.set(i, c, (image >> c) & 1U);
  }
  return m;
}

gf2::Matrix Field::frobenius_matrix(unsigned k) const {
  gf2::Matrix m(d_);
  const std::uint64_t e = std::uint64_t{1} << (k % d_);
  for (unsigned i = 0; i < d_; ++i) {
    const std::uint64_t image = pow(std::uint64_t{1} << i, e);
    for (unsigned c = 0; c < d_; ++c) m.set(i, c, (image >> c) & 1U);
  }
  return m;
}

unsigned order_of_two_mod(std::uint64_t r) {
  if (r < 3 || r % 2 == 0) throw DomainError("order of 2 is defined modulo odd r > 1");
  std::uint64_t x = 2 % r;
  unsigned k = 1;
  while (x != 1) {
    x = (x * 2) % r;
    ++k;
  }
  return k;
}

}  // namespace exprim::field
