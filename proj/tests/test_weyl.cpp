#include <gtest/gtest.h>

#include "exprim/error.hpp"
#include "exprim/oracles.hpp"
#include "exprim/weyl.hpp"

using namespace exprim;
using namespace exprim::weyl;

namespace {

Weight fundamental(std::size_t ell, std::initializer_list<std::size_t> one_based) {
  Weight w;
  w.coeffs.assign(ell, 0);
  for (const auto i : one_based) w.coeffs[i - 1] = 1;
  return w;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

TEST(WeylOrbit, SpecExamples) {
  for (std::size_t ell = 1; ell <= 20; ++ell) {
    EXPECT_EQ(weyl_orbit_size(fundamental(ell, {1})), static_cast<unsigned long>(ell + 1));
  }
  EXPECT_EQ(weyl_orbit_size(fundamental(9, {5})), 252);
  EXPECT_EQ(weyl_orbit_size(Weight::parse(9, "010000010")), 1260);
}

TEST(WeylOrbit, Rejections) {
  EXPECT_THROW(weyl_orbit_size(Weight::parse(4, "0000")), DomainError);
  EXPECT_THROW(Weight::parse(4, "010"), ParseError);
  EXPECT_THROW(Weight::parse(3, "012"), ParseError);
}

TEST(WeylOrbit, MatchesEnumerationUpToRankSix) {
  for (std::size_t ell = 1; ell <= 6; ++ell) {
    for (unsigned mask = 1; mask < (1U << ell); ++mask) {
      Weight w;
      for (std::size_t i = 0; i < ell; ++i) w.coeffs.push_back((mask >> i) & 1);
      EXPECT_EQ(weyl_orbit_size(w), static_cast<unsigned long>(oracles::weyl_orbit_bruteforce(w))) << w.to_string();
    }
  }
}

TEST(WeylOrbit, MatchesEnumerationAtRankEight) {
  for (const char* bits : {"10000001", "01000010", "00011000", "11111111", "00000100"}) {
    const auto w = Weight::parse(8, bits);
    EXPECT_EQ(weyl_orbit_size(w), static_cast<unsigned long>(oracles::weyl_orbit_bruteforce(w))) << bits;
  }
}

TEST(WeylOrbit, DividesGroupOrderAndIsFlipInvariant) {
  for (std::size_t ell = 1; ell <= 14; ++ell) {
    const auto group = factorial(ell + 1);
    for (unsigned mask = 1; mask < (1U << ell); mask += 7) {
      Weight w;
      for (std::size_t i = 0; i < ell; ++i) w.coeffs.push_back((mask >> i) & 1);
      const auto size = weyl_orbit_size(w);
      EXPECT_TRUE(mpz_divisible_p(group.get_mpz_t(), size.get_mpz_t()));
      Weight flipped = w;
      std::reverse(flipped.coeffs.begin(), flipped.coeffs.end());
      EXPECT_EQ(weyl_orbit_size(flipped), size);
    }
  }
}

TEST(WeylOrbit, Flags) {
  EXPECT_TRUE(Weight::parse(9, "010000010").is_unitary_symmetric());
  EXPECT_FALSE(Weight::parse(9, "010000000").is_unitary_symmetric());
  EXPECT_TRUE(Weight::parse(5, "10011").satisfies_orthogonal_constraint());
  EXPECT_FALSE(Weight::parse(5, "10010").satisfies_orthogonal_constraint());
  EXPECT_TRUE(Weight::parse(3, "000").is_trivial());
}

TEST(PairBound, MatchesOrbitOfSymmetricPair) {
  for (std::size_t ell = 4; ell <= 30; ++ell) {
    for (std::size_t k = 1; 2 * k <= ell; ++k) {
      const auto w = k == ell + 1 - k ? fundamental(ell, {k}) : fundamental(ell, {k, ell + 1 - k});
      EXPECT_EQ(symmetric_pair_bound(ell, k), weyl_orbit_size(w)) << ell << ' ' << k;
    }
  }
}

TEST(Floor, SpecExamples) {
  const auto r9 = unitary_dim_floor_check(9);
  EXPECT_EQ(r9.minimal_k, 2U);
  EXPECT_EQ(r9.floor, 1260);
  EXPECT_EQ(r9.floor, 9 * 80 * 7 / 4);
  EXPECT_TRUE(r9.passed());
  EXPECT_TRUE(r9.exhaustive);

  const auto r10 = unitary_dim_floor_check(10);
  EXPECT_EQ(r10.floor, 1980);
  EXPECT_TRUE(r10.passed());

  // the middle weight is exempt and lies below the floor
  EXPECT_LT(weyl_orbit_size(fundamental(9, {5})), r9.floor);
}

TEST(Floor, HoldsThroughRankForty) {
  for (std::size_t ell = 9; ell <= 40; ++ell) {
    const auto r = unitary_dim_floor_check(ell);
    EXPECT_TRUE(r.passed()) << ell;
    EXPECT_EQ(r.exhaustive, ell <= kExhaustiveFloorLimit);
    const BigInt closed = BigInt(static_cast<unsigned long>(ell)) * static_cast<unsigned long>(ell * ell - 1) *
                          static_cast<unsigned long>(ell - 2) / 4;
    EXPECT_EQ(r.floor, closed);
  }
}

TEST(Floor, Domain) { EXPECT_THROW(unitary_dim_floor_check(8), DomainError); }
