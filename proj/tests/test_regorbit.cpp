#include <gtest/gtest.h>

#include <random>

#include "exprim/builders.hpp"
#include "exprim/corpus.hpp"
#include "exprim/error.hpp"
#include "exprim/regorbit.hpp"

using namespace exprim;
using namespace exprim::regorbit;
using groups::MatrixGroup;

namespace {

gf2::Matrix from_strings(std::vector<std::string> rows) {
  std::vector<gf2::Vector> v;
  for (const auto& r : rows) v.push_back(gf2::Vector::parse(r));
  return gf2::Matrix::from_rows(v);
}

MatrixGroup z3() { return MatrixGroup({from_strings({"01", "11"})}, groups::BigInt(3)); }
MatrixGroup gl2() { return groups::build_classical(groups::ClassicalFamily::gl, 2); }

MatrixGroup deleted(const char* perm) {
  const auto p = corpus::load_permutation_source(perm);
  return groups::build_deleted_perm_module(p.generators)
      .with_order(groups::chain_order(groups::permutation_module(p.generators)));
}

// Oracle: a vector lies in a regular orbit iff no nonidentity element fixes it.
bool regular_orbit_by_stabilisers(const groups::ElementTable& t) {
  const std::size_t d = t.dim();
  std::vector<gf2::Word> rows(d);
  for (gf2::Word v = 1; v < (gf2::Word{1} << d); ++v) {
    bool fixed = false;
    for (std::size_t i = 1; i < t.size() && !fixed; ++i) {
      t.rows(i, rows);
      gf2::Word img = 0;
      for (std::size_t b = 0; b < d; ++b) {
        if ((v >> b) & 1) img ^= rows[b];
      }
      fixed = img == v;
    }
    if (!fixed) return true;
  }
  return false;
}

}  // namespace

TEST(RegularOrbit, SpecExamples) {
  const auto r = regular_orbit_exact(z3());
  EXPECT_TRUE(r.exists);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, 1U);  // (1,0)

  EXPECT_FALSE(regular_orbit_exact(deleted("sym5.perm")).exists);
  EXPECT_FALSE(regular_orbit_exact(deleted("l2_11.perm")).exists);
}

TEST(RegularOrbit, NeedsOrder) {
  const MatrixGroup g({from_strings({"01", "11"})});
  EXPECT_THROW(regular_orbit_exact(g), DomainError);
}

TEST(FixedSpaceCover, SpecExamples) {
  EXPECT_FALSE(fixed_space_cover(z3(), 100));
  EXPECT_TRUE(fixed_space_cover(gl2(), 100));
  EXPECT_TRUE(fixed_space_cover(deleted("sym5.perm"), 1000));
}

TEST(FixedSpaceCover, CapExceeded) { EXPECT_THROW(fixed_space_cover(deleted("sym5.perm"), 50), ResourceError); }

TEST(FixedSpaceCover, AgreesWithStabiliserOracle) {
  std::mt19937_64 rng(3);
  std::size_t with_regular = 0, without = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    // two generators in dimensions 3 and 4, cyclic groups in dimensions 5 to 7
    const bool cyclic = i % 3 == 2;
    const std::size_t d = cyclic ? 5 + i % 3 + (i / 3) % 2 : 3 + i % 2;
    const auto gl = groups::build_classical(groups::ClassicalFamily::gl, d);
    std::vector<gf2::Matrix> gens{groups::random_element(gl, rng)};
    if (!cyclic) gens.push_back(groups::random_element(gl, rng));
    MatrixGroup g(gens);
    const auto table = groups::ElementTable::enumerate(g, 1 << 20);
    g = g.with_order(groups::BigInt(static_cast<unsigned long>(table.size())));
    const bool oracle = regular_orbit_by_stabilisers(table);
    EXPECT_EQ(fixed_space_cover(table), !oracle);
    EXPECT_EQ(regular_orbit_exact(g).exists, oracle);
    (oracle ? with_regular : without)++;
  }
  EXPECT_GT(with_regular, 0U);
  EXPECT_GT(without, 0U);
}

TEST(CountingBound, SpecExamples) {
  const auto gl = groups::prime_order_class_data(gl2(), 100);
  EXPECT_EQ(counting_bound(gl, 2), CountingVerdict::inconclusive);
  const auto z = groups::prime_order_class_data(z3(), 100);
  EXPECT_EQ(counting_bound(z, 2), CountingVerdict::regular_orbit_certified);
  groups::ClassData empty;
  empty.dim = 1;
  EXPECT_EQ(counting_bound(empty, 1), CountingVerdict::regular_orbit_certified);
}

TEST(CountingBound, GL2Sum) {
  // three involutions fixing a line, two elements of order 3 fixing nothing
  const auto data = groups::prime_order_class_data(gl2(), 100);
  groups::BigInt sum = 0;
  for (const auto& r : data.records) sum += r.class_size * (groups::BigInt(1) << static_cast<unsigned>(r.fix_dim));
  EXPECT_EQ(sum, 8);
}

TEST(CountingBound, MonotoneInDimension) {
  for (const char* file : {"alt5_d4.g2m", "l3_d3.g2m", "sym7_d6.g2m", "u33_d6.g2m"}) {
    const auto& s = corpus::group_source(file);
    const auto data = groups::prime_order_class_data(corpus::load(s), groups::kDefaultCap);
    bool certified = false;
    for (std::size_t d = 1; d <= 40; ++d) {
      const bool now = counting_bound(data, d) == CountingVerdict::regular_orbit_certified;
      EXPECT_TRUE(!certified || now) << file << " d=" << d;
      certified = now;
    }
    EXPECT_TRUE(certified) << file;
  }
}

TEST(AlphaCriterion, SpecExamples) {
  const std::vector<AlphaProfile> profile{{Rational(11), std::nullopt}};
  EXPECT_EQ(alpha_criterion(248, profile, {}, 3626), CountingVerdict::regular_orbit_certified);
  EXPECT_EQ(alpha_criterion(248, profile, {}, 2728), CountingVerdict::inconclusive);
  EXPECT_EQ(alpha_criterion(248, profile, {}, 2729), CountingVerdict::regular_orbit_certified);
}

TEST(AlphaCriterion, RejectsSmallAlpha) {
  const std::vector<AlphaProfile> profile{{Rational(3, 2), std::nullopt}};
  EXPECT_THROW(alpha_criterion(10, profile, {}, 100), DomainError);
}

TEST(AlphaCriterion, SpecialClassesCount) {
  // 2^10 against 600 * 2^{(1/2) 10} = 600 * 32
  const std::vector<SpecialClass> special{{Rational(2), groups::BigInt(600)}};
  EXPECT_EQ(alpha_criterion(0, {}, special, 10), CountingVerdict::inconclusive);
  const std::vector<SpecialClass> few{{Rational(2), groups::BigInt(31)}};
  EXPECT_EQ(alpha_criterion(0, {}, few, 10), CountingVerdict::regular_orbit_certified);
}

TEST(AlphaCriterion, DominatesCountingSumForBruteForcedAlpha) {
  const std::vector<MatrixGroup> cases{groups::build_classical(groups::ClassicalFamily::omega_minus, 4),
                                       groups::build_classical(groups::ClassicalFamily::gl, 3)};
  for (const auto& g : cases) {
    const auto table = groups::ElementTable::enumerate(g, 1 << 20);
    const std::size_t d = g.dim();
    std::vector<bool> seen(table.size(), false);
    std::vector<SpecialClass> special;
    groups::BigInt exact_sum = 0;
    for (std::size_t x = 1; x < table.size(); ++x) {
      if (seen[x] || !groups::is_prime(table.element_order(x))) continue;
      const auto cls = table.conjugacy_class(x);
      for (const auto y : cls) seen[y] = true;
      const auto alpha = groups::alpha_bruteforce(table, x);
      ASSERT_TRUE(alpha);
      const auto fix = table.fixed_space_dim(x);
      // term-wise: 2^{fix} <= 2^{(1 - 1/alpha) d}
      EXPECT_LE(Rational(static_cast<long>(fix)), (1 - Rational(1, static_cast<long>(*alpha))) * static_cast<long>(d));
      special.push_back({Rational(static_cast<long>(*alpha)), groups::BigInt(static_cast<unsigned long>(cls.size()))});
      exact_sum += groups::BigInt(static_cast<unsigned long>(cls.size())) << static_cast<unsigned>(fix);
    }
    // the alpha sum dominates, so its certificate implies the exact one at every d
    for (long dd = static_cast<long>(d); dd <= 40; ++dd) {
      groups::ClassData data = groups::prime_order_class_data(table);
      if (alpha_criterion(0, {}, special, dd) == CountingVerdict::regular_orbit_certified) {
        EXPECT_EQ(counting_bound(data, static_cast<std::size_t>(dd)), CountingVerdict::regular_orbit_certified);
      }
    }
    EXPECT_GT(exact_sum, 0);
  }
}

TEST(Lemma, Guard) {
  EXPECT_EQ(not_ep_from_regular_orbit(z3(), false), LemmaVerdict::no_conclusion);
  EXPECT_EQ(not_ep_from_regular_orbit(deleted("sym5.perm"), true), LemmaVerdict::no_conclusion);
  // Z_5.Z_4 on F_2^4 has no regular orbit: orbits of size 5 and 10 only
  const auto g54 = groups::build_semilinear(4, 5, 4).group;
  EXPECT_FALSE(regular_orbit_exact(g54).exists);
  EXPECT_EQ(not_ep_from_regular_orbit(g54, false), LemmaVerdict::no_conclusion);
  // Z_5.Z_2 acting on F_2^4: order 10, orbits of size 5 only
  EXPECT_EQ(not_ep_from_regular_orbit(groups::build_semilinear(4, 5, 2).group, false), LemmaVerdict::no_conclusion);
  // Z_15 is regular on the nonzero vectors of F_2^4 and 15 is composite
  EXPECT_EQ(not_ep_from_regular_orbit(groups::build_semilinear(4, 15, 1).group, false), LemmaVerdict::not_ep);
}

TEST(Lemma, NotEPVerdictIsSound) {
  for (const auto& s : corpus::group_sources()) {
    if (s.file == "gammal1_d6_r13_e3.g2m") continue;
    const auto g = corpus::load(s);
    if (g.dim() > 11) continue;
    if (not_ep_from_regular_orbit(g, false) == LemmaVerdict::not_ep) {
      EXPECT_FALSE(action::is_extremely_primitive(g).is_ep) << s.file;
    }
  }
}
