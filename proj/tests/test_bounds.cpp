#include <gtest/gtest.h>

#include <random>
#include <set>

#include "exprim/bounds.hpp"
#include "exprim/error.hpp"
#include "exprim/groups.hpp"
#include "exprim/poly.hpp"

using namespace exprim;
using namespace exprim::bounds;
using exprim::poly::Poly;
using exprim::poly::RatFun;

namespace {

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

PowerSumProblem problem(Rational lhs, std::vector<std::pair<long, Rational>> terms) {
  PowerSumProblem p{lhs, {}};
  for (auto& [c, e] : terms) {
    e.canonicalize();
    p.rhs.push_back({BigInt(c), e});
  }
  return p;
}

// Oracle for integer exponents: direct big-integer evaluation.
Verdict integer_oracle(const PowerSumProblem& p) {
  BigInt rhs = 0;
  for (const auto& t : p.rhs) rhs += t.coeff * pow2(t.exponent.get_num().get_ui());
  return pow2(p.lhs_exponent.get_num().get_ui()) > rhs ? Verdict::holds : Verdict::fails;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

TEST(Poly, ArithmeticAndEvaluation) {
  const Poly x = Poly::x();
  const Poly p = x * x - Poly::constant(2);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval(3), 7);
  EXPECT_EQ(p.derivative(), Poly::constant(2) * x);
  EXPECT_EQ((p - p).degree(), -1);
  auto [qt, r] = divmod(x * x * x - Poly::constant(1), x - Poly::constant(1));
  EXPECT_EQ(qt, x * x + x + Poly::constant(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(p.to_string(), "x^2 - 2");
}

TEST(Poly, SturmCountsKnownRoots) {
  const Poly x = Poly::x();
  // (x - 1)(x - 2)(x - 5)
  const Poly p = (x - Poly::constant(1)) * (x - Poly::constant(2)) * (x - Poly::constant(5));
  EXPECT_EQ(p.roots_above(0), 3u);
  EXPECT_EQ(p.roots_above(Rational(3, 2)), 2u);
  EXPECT_EQ(p.roots_above(3), 1u);
  EXPECT_EQ(p.roots_above(6), 0u);
  EXPECT_THROW(p.roots_above(2), DomainError);
  // repeated root counts once
  const Poly sq = (x - Poly::constant(4)) * (x - Poly::constant(4));
  EXPECT_EQ(sq.roots_above(0), 1u);
  EXPECT_EQ((x * x + Poly::constant(1)).roots_above(-100), 0u);
}

TEST(Poly, PositiveFromAgreesWithDenseSampling) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpq_class> c(4);
    for (auto& v : c) v = coef(rng);
    const Poly p(c);
    if (p.is_zero() || p.eval(0) == 0) continue;
    bool sampled = true;
    for (int k = 0; k <= 4000; ++k) {
      if (p.eval(Rational(k, 100)) <= 0) sampled = false;
    }
    if (p.leading() < 0) sampled = false;
    // sampling can miss a dip between samples, never invent one
    if (p.positive_from(0)) EXPECT_TRUE(sampled) << p.to_string();
    if (!sampled) EXPECT_FALSE(p.positive_from(0)) << p.to_string();
  }
}

TEST(Poly, RatFunArithmetic) {
  const RatFun a{Poly::x(), Poly::x() + Poly::constant(1)};
  const RatFun b = RatFun::of(Poly::constant(1));
  EXPECT_EQ((a + b).eval(1), Rational(3, 2));
  EXPECT_EQ((a - b).eval(3), Rational(-1, 4));
  EXPECT_EQ((a * a).eval(1), Rational(1, 4));
  EXPECT_THROW(a.eval(-1), DomainError);
}

// ---------------------------------------------------------------------------
// compare_power_sums

TEST(PowerSums, SmallExamples) {
  EXPECT_EQ(compare_power_sums(problem(4, {{3, 1}, {2, 0}})), Verdict::holds);
  EXPECT_EQ(compare_power_sums(problem(2, {{3, 1}, {2, 0}})), Verdict::fails);
  EXPECT_EQ(compare_power_sums(problem(1, {})), Verdict::holds);
  EXPECT_THROW(compare_power_sums(problem(1, {{0, 0}})), DomainError);
}

TEST(PowerSums, EqualityIsNotStrict) {
  EXPECT_EQ(compare_power_sums(problem(10, {{1, 9}, {1, 9}})), Verdict::fails);
  EXPECT_EQ(compare_power_sums(problem(Rational(3, 2), {{2, Rational(1, 2)}})), Verdict::fails);
  EXPECT_EQ(compare_power_sums(problem(Rational(5, 3), {{1, Rational(2, 3)}, {1, Rational(2, 3)}})), Verdict::fails);
  EXPECT_EQ(compare_power_sums(problem(Rational(1000001, 7), {{4, Rational(1000001 - 14, 7)}})), Verdict::fails);
}

TEST(PowerSums, AgreesWithIntegerOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> ex(0, 2000), cnt(1, 6), cf(1, 1000);
  for (int trial = 0; trial < 400; ++trial) {
    const long lhs = ex(rng);
    std::vector<std::pair<long, Rational>> terms;
    const long k = cnt(rng);
    for (long i = 0; i < k; ++i) {
      // cluster near lhs so both outcomes and near-ties are common
      long e = lhs - static_cast<long>(rng() % 12);
      if (e < 0) e = 0;
      terms.push_back({cf(rng), Rational(e)});
    }
    const auto p = problem(lhs, terms);
    EXPECT_EQ(compare_power_sums(p), integer_oracle(p)) << "trial " << trial;
  }
}

TEST(PowerSums, ExactTiesAgainstIntegerOracle) {
  // 2^L against (2^j - 1) 2^{L-j} + 2^{L-j}: an exact tie, then nudged both ways.
  for (unsigned long L : {50ul, 700ul, 2000ul}) {
    for (unsigned long j : {1ul, 5ul, 40ul}) {
      PowerSumProblem tie{Rational(L), {{pow2(j) - 1, Rational(L - j)}, {1, Rational(L - j)}}};
      EXPECT_EQ(compare_power_sums(tie), Verdict::fails);
      EXPECT_EQ(compare_power_sums(tie), integer_oracle(tie));
      PowerSumProblem below{Rational(L), {{pow2(j) - 1, Rational(L - j)}, {1, Rational(0)}}};
      EXPECT_EQ(compare_power_sums(below), integer_oracle(below));
    }
  }
}

TEST(PowerSums, IrrationalGapBeyondIntervalPrecision) {
  // c = floor(sqrt(2) 2^k) satisfies c < 2^{k + 1/2} < c + 1 with a relative gap
  // of about 2^{-k}, far below the interval stage's 4096 bits.
  const unsigned long k = 6000;
  BigInt c;
  const BigInt two_pow = pow2(2 * k + 1);
  mpz_sqrt(c.get_mpz_t(), two_pow.get_mpz_t());
  const Rational lhs = Rational(2 * k + 1, 2);
  EXPECT_FALSE(compare_power_sums_at_precision({lhs, {{c, 0}}}, 4096).has_value());
  EXPECT_EQ(compare_power_sums({lhs, {{c, 0}}}), Verdict::holds);
  EXPECT_EQ(compare_power_sums({lhs, {{c + 1, 0}}}), Verdict::fails);
}

TEST(PowerSums, PrecisionEscalationIsMonotone) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 12), cf(1, 50);
  for (int trial = 0; trial < 300; ++trial) {
    Rational lhs(num(rng), den(rng));
    lhs.canonicalize();
    std::vector<std::pair<long, Rational>> terms;
    for (int i = 0; i < 3; ++i) terms.push_back({cf(rng), lhs - Rational(static_cast<long>(rng() % 80), den(rng))});
    const auto p = problem(lhs, terms);
    const Verdict exact = compare_power_sums(p);
    std::optional<Verdict> seen;
    for (long bits = 16; bits <= 2048; bits *= 2) {
      const auto v = compare_power_sums_at_precision(p, bits);
      if (seen) {
        ASSERT_TRUE(v.has_value());
        EXPECT_EQ(*v, *seen);
      }
      if (v) {
        EXPECT_EQ(*v, exact);
        seen = v;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Catalog

TEST(Catalog, NamesAreUniqueAndLookupWorks) {
  std::set<std::string> names;
  for (const auto& e : catalog()) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  EXPECT_EQ(catalog_entry("ort-l3").name, "ort-l3");
  EXPECT_THROW(catalog_entry("nope"), DomainError);
}

TEST(Catalog, ExamplePoints) {
  EXPECT_EQ(certify_named_bound("e8-alpha", 3626, 3626).points.at(0).verdict, Verdict::holds);
  EXPECT_EQ(certify_named_bound("uni-spin", 11, 11).points.at(0).verdict, Verdict::fails);
  EXPECT_EQ(certify_named_bound("symp-spin", 9, 9).points.at(0).verdict, Verdict::holds);
}

TEST(Catalog, E8ThresholdIsExact) {
  // 2^d > 2^{248 + 10d/11} iff d/11 > 248 iff d > 2728
  const auto rep = certify_named_bound("e8-alpha", 2700, 2760);
  for (const auto& p : rep.points) {
    EXPECT_EQ(p.verdict == Verdict::holds, p.param > 2728) << p.param;
  }
}

TEST(Catalog, SympSpinDominantExponent) {
  // at l = 9 the leading term 171 + 256 dominates the j = 1 term 33 + 256 + 128
  const auto inst = catalog_entry("symp-spin").instantiate(9);
  Rational top = inst.problem.rhs.front().exponent;
  for (const auto& t : inst.problem.rhs) top = std::max(top, t.exponent);
  EXPECT_EQ(top, 427);
  EXPECT_EQ(inst.d, 512);
}

TEST(Catalog, ParityAndDomainErrors) {
  const auto rep = certify_named_bound("uni-spin", 9, 14);
  ASSERT_EQ(rep.points.size(), 3u);
  EXPECT_EQ(rep.points[0].param, 9);
  EXPECT_EQ(rep.points[2].param, 13);
  EXPECT_THROW(certify_named_bound("uni-spin", 1, 9), DomainError);
  EXPECT_THROW(certify_named_bound("uni-spin", 10, 10), DomainError);
  EXPECT_THROW(certify_named_bound("symp-l3", 12, 10), DomainError);
  EXPECT_THROW(certify_named_bound("nope", 9, 9), DomainError);
}

TEST(Catalog, Lambda3DimensionBothParities) {
  // binomial(2l, 3) - 2(1 + delta) l
  EXPECT_EQ(catalog_entry("symp-l3").instantiate(9).d, 816 - 36);
  EXPECT_EQ(catalog_entry("symp-l3").instantiate(10).d, 1140 - 20);
}

TEST(Catalog, FamilyMatchesInstantiation) {
  for (const auto& e : catalog()) {
    if (!e.family) continue;
    for (long x = std::max(e.min_param, 3L); x <= 40; ++x) {
      const Instance inst = e.instantiate(x);
      const Rational xr(x);
      const Branch* branch = nullptr;
      for (const auto& b : e.family->branches) {
        if (b.parity < 0 || b.parity == x % 2) branch = &b;
      }
      ASSERT_NE(branch, nullptr);
      const Rational fd = branch->dim.eval(xr);
      // the family may use a real threshold whose ceiling is the instance dimension
      EXPECT_GE(inst.d, fd) << e.name << " " << x;
      EXPECT_LT(inst.d - fd, 1) << e.name << " " << x;
      ASSERT_EQ(inst.problem.rhs.size(), e.family->terms.size()) << e.name;
      for (std::size_t i = 0; i < inst.problem.rhs.size(); ++i) {
        const auto& t = e.family->terms[i];
        const Rational expected = t.a.eval(xr) + t.b.eval(xr) * inst.d;
        EXPECT_EQ(inst.problem.rhs[i].exponent, expected) << e.name << " " << x << " term " << i;
        EXPECT_EQ(Rational(groups::log2_ceil(inst.problem.rhs[i].coeff)), t.coeff_bits.eval(xr))
            << e.name << " " << x << " term " << i;
      }
    }
  }
}

TEST(Catalog, MonotoneInDFlag) {
  EXPECT_TRUE(catalog_entry("symp-generic").instantiate(9).monotone_in_d);
  EXPECT_TRUE(catalog_entry("ort-generic").instantiate(9).monotone_in_d);
  EXPECT_FALSE(catalog_entry("symp-l3").instantiate(9).monotone_in_d);
}

TEST(Catalog, CeilingThresholdStaysAboveRealThreshold) {
  // ceil(8 l^3 / 3) is the least integer d >= 8 l^3 / 3; the verdict holds
  // there and, by monotonicity in d, for every larger d.
  for (long l = 9; l <= 20; ++l) {
    const auto inst = catalog_entry("ort-generic").instantiate(l);
    EXPECT_GE(3 * inst.d, 8 * l * l * l);
    EXPECT_LT(3 * (inst.d - 1), 8 * l * l * l);
    auto shifted = inst.problem;
    for (int step = 1; step <= 5; ++step) {
      const Rational d = inst.d + step * 97;
      shifted.lhs_exponent = d;
      shifted.rhs[0].exponent = Rational(l * (2 * l - 1) + 1) + (1 - Rational(1, l + 3)) * d;
      shifted.rhs[1].exponent = (1 - Rational(1, 2 * l)) * d;
      for (auto& t : shifted.rhs) t.exponent.canonicalize();
      EXPECT_EQ(compare_power_sums(shifted), Verdict::holds);
    }
  }
}

// ---------------------------------------------------------------------------
// tail_certify

TEST(Tail, CertifiesClaimedFamilies) {
  for (const auto& [name, x0] : std::vector<std::pair<std::string, long>>{
           {"symp-l3", 9}, {"ort-l3", 9}, {"symp-generic", 9}, {"ort-generic", 9}, {"e8-alpha", 3626}}) {
    const auto t = tail_certify(name, x0);
    EXPECT_EQ(t.verdict, TailVerdict::certified) << name << ": " << t.reason;
    for (const auto& g : t.gaps) EXPECT_GE(g.gap_at_start, 1) << name;
  }
}

TEST(Tail, SympL3GapsAtStart) {
  const auto t = tail_certify("symp-l3", 9);
  ASSERT_EQ(t.gaps.size(), 4u);
  // 2l^2 - 17l + 13 and 2l^2 - 7l at l = 9, for both parity branches
  EXPECT_EQ(t.gaps[0].gap_at_start, 22);
  EXPECT_EQ(t.gaps[1].gap_at_start, 99);
}

TEST(Tail, UniSpinIsUnchecked) {
  const auto t = tail_certify("uni-spin", 9);
  EXPECT_EQ(t.verdict, TailVerdict::unchecked);
}

TEST(Tail, FailingFamiliesAreNeverCertified) {
  for (const char* name : {"symp-l3-fail", "ort-l3-fail-symp1", "ort-l3-fail-ort1"}) {
    EXPECT_EQ(tail_certify(name, 9).verdict, TailVerdict::unchecked) << name;
  }
  // below the point where the claim starts, the dominance argument must refuse
  EXPECT_EQ(tail_certify("symp-generic", 3).verdict, TailVerdict::unchecked);
}

TEST(Tail, EntriesWithoutFamilyThrow) {
  EXPECT_THROW(tail_certify("symp-spin", 9), DomainError);
  EXPECT_THROW(tail_certify("ort-spin", 10), DomainError);
  EXPECT_THROW(tail_certify("nope", 9), DomainError);
}

TEST(Tail, CertifiedImpliesPointChecks) {
  for (const auto& e : catalog()) {
    if (!e.family) continue;
    for (long x0 = std::max(e.min_param, 3L); x0 <= 14; ++x0) {
      const long start = e.parameter == "d" ? x0 + 3600 : x0;
      if (tail_certify(e.name, start).verdict != TailVerdict::certified) continue;
      for (const auto& p : certify_named_bound(e.name, start, start + 50).points) {
        EXPECT_EQ(p.verdict, Verdict::holds) << e.name << " from " << start << " at " << p.param;
      }
    }
  }
}
