// Named power-of-two inequalities. Each entry has a direct instantiation at
// integer parameters and, where the exponents are rational functions of the
// parameter, a symbolic family used by the tail certifier. The two are kept
// separate so tests can check one against the other.

#include <utility>

#include "exprim/bounds.hpp"
#include "exprim/error.hpp"

namespace exprim::bounds {

namespace {

using poly::Poly;
using poly::RatFun;

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

BigInt binom(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational q(const BigInt& n) { return Rational(n); }
Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Right-hand term c * 2^{a + b d}.
struct Raw {
  BigInt c;
  Rational a;
  Rational b;
};

Instance make(const Rational& d, const std::vector<Raw>& raw) {
  Instance inst;
  inst.d = d;
  inst.d.canonicalize();
  inst.problem.lhs_exponent = d;
  inst.monotone_in_d = true;
  for (const auto& t : raw) {
    Rational e = t.a + t.b * d;
    e.canonicalize();
    inst.problem.rhs.push_back({t.c, e});
    if (t.b >= 1) inst.monotone_in_d = false;
  }
  return inst;
}

// Right-hand sides shared by several entries.
std::vector<Raw> symp1(long l) {
  return {{1, q(l * (2 * l + 1)), 1 - q(1, l + 3)}, {pow2(2 * l) - 1, 0, 1 - q(1, 2 * l + 1)}};
}
std::vector<Raw> ort1(long l) {
  return {{1, q(l * (2 * l - 1) + 1), 1 - q(1, l + 3)},
          {pow2(l - 1) * (pow2(l) + 1), 0, 1 - q(1, 2 * l)}};
}

BigInt lambda3_dim(long l) {
  const long delta = l % 2 == 1 ? 1 : 0;
  return binom(2 * l, 3) - 2 * (1 + delta) * l;
}
BigInt l1l2_dim(long l) { return 16 * binom(l + 1, 3); }

std::function<std::optional<Verdict>(long)> from(long start, Verdict v) {
  return [start, v](long x) -> std::optional<Verdict> {
    if (x >= start) return v;
    return std::nullopt;
  };
}
std::function<std::optional<Verdict>(long)> between(long lo, long hi, Verdict v) {
  return [lo, hi, v](long x) -> std::optional<Verdict> {
    if (x >= lo && x <= hi) return v;
    return std::nullopt;
  };
}

// Symbolic pieces in the parameter x.
Poly P(std::vector<mpq_class> c) { return Poly(std::move(c)); }
RatFun R(const Poly& p) { return RatFun::of(p); }
RatFun one_minus_inv(const Poly& p) { return {p - Poly::constant(1), p}; }

const Poly kX = Poly::x();
const Poly kZero;

TermFamily symp1_term1() { return {R(P({0, 1, 2})), one_minus_inv(P({3, 1})), kZero}; }
TermFamily symp1_term2() { return {R(kZero), one_minus_inv(P({1, 2})), P({0, 2})}; }
TermFamily ort1_term1() { return {R(P({1, -1, 2})), one_minus_inv(P({3, 1})), kZero}; }
// 2^{x-1}(2^x + 1) <= 2^{2x}
TermFamily ort1_term2() { return {R(kZero), one_minus_inv(P({0, 2})), P({0, 2})}; }

// binomial(2x, 3) - 2x (even) or - 4x (odd)
std::vector<Branch> lambda3_branches() {
  const Poly c = P({0, q(2, 3), -2, q(4, 3)});
  return {{0, c - P({0, 2})}, {1, c - P({0, 4})}};
}
// 16 binomial(x + 1, 3)
Poly l1l2_poly() { return P({0, q(-8, 3), 0, q(8, 3)}); }

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  out.push_back({"e8-alpha", "d", 1, -1, "2^d > 2^{248 + (10/11) d}",
                 [](long d) { return make(q(d), {{1, 248, q(10, 11)}}); }, from(3626, Verdict::holds),
                 Family{{{-1, kX}}, {{R(P({248})), R(P({q(10, 11)})), kZero}}}});

  out.push_back({"uni-generic", "ell", 3, -1,
                 "2^d > 2^{(l+1)^2 + (1 - 1/(l+1)) d} at d = l(l^2-1)(l-2)/4",
                 [](long l) {
                   const Rational d = q(l * (l * l - 1) * (l - 2), 4);
                   return make(d, {{1, q((l + 1) * (l + 1)), 1 - q(1, l + 1)}});
                 },
                 from(8, Verdict::holds),
                 Family{{{-1, P({0, q(1, 2), q(-1, 4), q(-1, 2), q(1, 4)})}},
                        {{R(P({1, 2, 1})), one_minus_inv(P({1, 1})), kZero}}}});

  out.push_back({"uni-spin", "ell", 3, 1,
                 "2^d > 2^{(l+1)^2 + (1 - 1/(l+1)) d} at d = binomial(l+1, (l+1)/2), l odd",
                 [](long l) {
                   const Rational d = q(binom(l + 1, (l + 1) / 2));
                   return make(d, {{1, q((l + 1) * (l + 1)), 1 - q(1, l + 1)}});
                 },
                 [](long l) -> std::optional<Verdict> {
                   if (l == 9 || l == 11) return Verdict::fails;
                   if (l >= 13) return Verdict::holds;
                   return std::nullopt;
                 },
                 std::nullopt});

  out.push_back({"symp-generic", "ell", 1, -1,
                 "2^d > 2^{l(2l+1) + (1 - 1/(l+3)) d} + (2^{2l} - 1) 2^{(1 - 1/(2l+1)) d} at d = 3 l^3",
                 [](long l) { return make(q(3 * l * l * l), symp1(l)); }, from(9, Verdict::holds),
                 Family{{{-1, P({0, 0, 0, 3})}}, {symp1_term1(), symp1_term2()}}});

  out.push_back({"symp-spin", "ell", 2, -1,
                 "2^d > 2^{l(2l+1) + d/2} + sum_{j=1}^{floor(l/2)} 2^{4j(l-j) + 1 + d/2 + 2^{l-j-1}} at d = 2^l",
                 [](long l) {
                   std::vector<Raw> raw{{1, q(l * (2 * l + 1)), q(1, 2)}};
                   for (long j = 1; j <= l / 2; ++j) {
                     raw.push_back({1, q(4 * j * (l - j) + 1) + q(pow2(l - j - 1)), q(1, 2)});
                   }
                   return make(q(pow2(l)), raw);
                 },
                 between(9, 12, Verdict::holds), std::nullopt});

  out.push_back({"symp-l1l2", "ell", 2, -1, "2^d > 2^{l(2l+1) + d - 4(l-1)^2} at d = 16 binomial(l+1, 3)",
                 [](long l) { return make(q(l1l2_dim(l)), {{1, q(l * (2 * l + 1) - 4 * (l - 1) * (l - 1)), 1}}); },
                 between(9, 11, Verdict::holds),
                 Family{{{-1, l1l2_poly()}}, {{R(P({-4, 9, -2})), R(P({1})), kZero}}}});

  out.push_back({"symp-l1l2-generic", "ell", 2, -1,
                 "2^d > 2^{l(2l+1) + (1 - 1/(l+3)) d} + (2^{2l} - 1) 2^{(1 - 1/(2l+1)) d} at d = 16 binomial(l+1, 3)",
                 [](long l) { return make(q(l1l2_dim(l)), symp1(l)); }, from(12, Verdict::holds),
                 Family{{{-1, l1l2_poly()}}, {symp1_term1(), symp1_term2()}}});

  out.push_back({"symp-l3", "ell", 3, -1,
                 "2^d > 2^{l(2l+1) + d - 4l^2 + 16l - 14} + (2^{2l} - 1) 2^{d - 2l^2 + 5l - 1} at "
                 "d = binomial(2l, 3) - 2(1 + delta) l, delta = 1 for odd l",
                 [](long l) {
                   return make(q(lambda3_dim(l)), {{1, q(l * (2 * l + 1) - 4 * l * l + 16 * l - 14), 1},
                                                   {pow2(2 * l) - 1, q(-2 * l * l + 5 * l - 1), 1}});
                 },
                 from(9, Verdict::holds),
                 Family{lambda3_branches(),
                        {{R(P({-14, 17, -2})), R(P({1})), kZero}, {R(P({-1, 5, -2})), R(P({1})), P({0, 2})}}}});

  out.push_back({"symp-l3-fail", "ell", 3, -1,
                 "the symplectic generic inequality at the lambda_3 dimension (expected to fail)",
                 [](long l) { return make(q(lambda3_dim(l)), symp1(l)); }, from(9, Verdict::fails), std::nullopt});

  out.push_back({"ort-generic", "ell", 1, -1,
                 "2^d > 2^{l(2l-1) + 1 + (1 - 1/(l+3)) d} + 2^{l-1}(2^l + 1) 2^{(1 - 1/(2l)) d} at d = ceil(8 l^3 / 3)",
                 [](long l) {
                   BigInt d = 8 * BigInt(l) * l * l;
                   mpz_cdiv_q_ui(d.get_mpz_t(), d.get_mpz_t(), 3);
                   return make(q(d), ort1(l));
                 },
                 from(9, Verdict::holds),
                 // certified at the real threshold 8x^3/3; monotonicity in d covers the ceiling
                 Family{{{-1, P({0, 0, 0, q(8, 3)})}}, {ort1_term1(), ort1_term2()}}});

  out.push_back({"ort-spin", "ell", 2, -1,
                 "2^d > 2^{l(2l-1) + 5d/8} + sum_{j=1}^{ceil(l/2)-1} 2^{2j(2l-2j-1) + 1 + d/2 + 2^{l-j-2}} at d = 2^{l-1}",
                 [](long l) {
                   std::vector<Raw> raw{{1, q(l * (2 * l - 1)), q(5, 8)}};
                   for (long j = 1; j <= (l + 1) / 2 - 1; ++j) {
                     // j <= l - 2 here, so 2^{l-j-2} is an integer
                     raw.push_back({1, q(2 * j * (2 * l - 2 * j - 1) + 1) + q(pow2(l - j - 2)), q(1, 2)});
                   }
                   return make(q(pow2(l - 1)), raw);
                 },
                 from(10, Verdict::holds), std::nullopt});

  out.push_back({"ort-l1l2", "ell", 2, -1,
                 "2^d > 2^{l(2l-1) + 1 + (1 - 1/(l+3)) d} + 2^{l-1}(2^l + 1) 2^{(1 - 1/(2l)) d} at d = 16 binomial(l+1, 3)",
                 [](long l) { return make(q(l1l2_dim(l)), ort1(l)); }, from(9, Verdict::holds),
                 Family{{{-1, l1l2_poly()}}, {ort1_term1(), ort1_term2()}}});

  out.push_back({"ort-l3", "ell", 3, -1,
                 "2^d > 2^{l(2l-1) + 1 + d - 4l^2 + 16l - 14} + 2^{l-1}(2^l + 1) 2^{d - 2l^2 + 5l - 1} at the "
                 "lambda_3 dimension",
                 [](long l) {
                   return make(q(lambda3_dim(l)), {{1, q(l * (2 * l - 1) + 1 - 4 * l * l + 16 * l - 14), 1},
                                                   {pow2(l - 1) * (pow2(l) + 1), q(-2 * l * l + 5 * l - 1), 1}});
                 },
                 from(9, Verdict::holds),
                 Family{lambda3_branches(),
                        {{R(P({-13, 15, -2})), R(P({1})), kZero}, {R(P({-1, 5, -2})), R(P({1})), P({0, 2})}}}});

  out.push_back({"ort-l3-fail-symp1", "ell", 3, -1,
                 "the symplectic generic inequality at the lambda_3 dimension, orthogonal case (expected to fail)",
                 [](long l) { return make(q(lambda3_dim(l)), symp1(l)); }, from(9, Verdict::fails), std::nullopt});

  out.push_back({"ort-l3-fail-ort1", "ell", 3, -1,
                 "the orthogonal generic inequality at the lambda_3 dimension (expected to fail)",
                 [](long l) { return make(q(lambda3_dim(l)), ort1(l)); }, from(9, Verdict::fails), std::nullopt});

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

}  // namespace exprim::bounds
