#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "exprim/action.hpp"
#include "exprim/builders.hpp"
#include "exprim/corpus.hpp"
#include "exprim/error.hpp"
#include "exprim/oracles.hpp"

using namespace exprim;
using namespace exprim::action;
using groups::MatrixGroup;

namespace {

MatrixGroup natural(groups::ClassicalFamily f, std::size_t d) { return groups::build_classical(f, d); }

MatrixGroup deleted_sym5() {
  return groups::build_deleted_perm_module(corpus::load_permutation_source("sym5.perm").generators);
}

std::vector<std::uint64_t> sorted_sizes(const OrbitDecomposition& o) {
  auto s = o.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

// Random two-generated subgroups of GL_d(2) for small d.
std::vector<MatrixGroup> random_subgroups(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MatrixGroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = 3 + i % 4;
    const auto gl = natural(groups::ClassicalFamily::gl, d);
    out.emplace_back(std::vector<gf2::Matrix>{groups::random_element(gl, rng), groups::random_element(gl, rng)});
  }
  return out;
}

}  // namespace

TEST(Orbits, SpecExamples) {
  const auto gl2 = natural(groups::ClassicalFamily::gl, 2);
  EXPECT_EQ(sorted_sizes(orbits_on_nonzero(gl2)), (std::vector<std::uint64_t>{3}));

  const auto a7 = corpus::load(corpus::group_source("a7_d4.g2m"));
  EXPECT_EQ(sorted_sizes(orbits_on_nonzero(a7)), (std::vector<std::uint64_t>{15}));

  EXPECT_EQ(sorted_sizes(orbits_on_nonzero(deleted_sym5())), (std::vector<std::uint64_t>{5, 10}));
}

TEST(Orbits, LabelsFollowLeastVector) {
  const auto o = orbits_on_nonzero(deleted_sym5());
  for (std::size_t l = 0; l < o.count(); ++l) {
    const auto m = o.members(l);
    ASSERT_FALSE(m.empty());
    EXPECT_EQ(m.front(), o.representatives[l]);
    if (l > 0) EXPECT_LT(o.representatives[l - 1], o.representatives[l]);
  }
}

TEST(Orbits, DimensionLimit) {
  const MatrixGroup big({gf2::Matrix::identity(kMaxOrbitDim + 1)});
  EXPECT_THROW(orbits_on_nonzero(big), ResourceError);
}

TEST(Orbits, SizesPartitionAndDivideOrder) {
  for (const auto& s : corpus::group_sources()) {
    if (s.file == "gammal1_d6_r13_e3.g2m") continue;
    const auto g = corpus::load(s);
    if (g.dim() > 10) continue;
    const auto o = orbits_on_nonzero(g);
    const auto total = std::accumulate(o.sizes.begin(), o.sizes.end(), std::uint64_t{0});
    EXPECT_EQ(total, (std::uint64_t{1} << g.dim()) - 1) << s.file;
    ASSERT_TRUE(g.order()) << s.file;
    for (const auto size : o.sizes) {
      EXPECT_TRUE(mpz_divisible_ui_p(g.order()->get_mpz_t(), size)) << s.file << " orbit of size " << size;
    }
  }
}

TEST(Primitivity, SpecExamples) {
  const auto sym5 = deleted_sym5();
  const auto o = orbits_on_nonzero(sym5);
  for (std::size_t l = 0; l < o.count(); ++l) {
    if (o.sizes[l] == 10) EXPECT_TRUE(is_primitive_on_orbit(sym5, o.members(l)).primitive);
  }

  const auto gammal = groups::build_semilinear(4, 15, 4).group;
  const auto all = orbits_on_nonzero(gammal);
  ASSERT_EQ(all.count(), 1U);
  const auto r = is_primitive_on_orbit(gammal, all.members(0));
  EXPECT_FALSE(r.primitive);
  EXPECT_TRUE(r.block.size() == 3 || r.block.size() == 5);
  EXPECT_EQ(r.block.front(), all.representatives[0]);

  const auto gl2 = natural(groups::ClassicalFamily::gl, 2);
  EXPECT_TRUE(is_primitive_on_orbit(gl2, orbits_on_nonzero(gl2).members(0)).primitive);
}

TEST(Primitivity, BlockIsABlock) {
  const auto gammal = groups::build_semilinear(4, 15, 4).group;
  const auto orbit = orbits_on_nonzero(gammal).members(0);
  const auto r = is_primitive_on_orbit(gammal, orbit);
  ASSERT_FALSE(r.primitive);
  std::vector<gf2::Word> block = r.block;
  std::sort(block.begin(), block.end());
  for (const auto& m : gammal.generators()) {
    const gf2::ActionTable t(m);
    std::vector<gf2::Word> image;
    for (const auto v : block) image.push_back(t.apply(v));
    std::sort(image.begin(), image.end());
    std::vector<gf2::Word> common;
    std::set_intersection(block.begin(), block.end(), image.begin(), image.end(), std::back_inserter(common));
    EXPECT_TRUE(common.empty() || common.size() == block.size());
  }
}

TEST(Primitivity, ThreadCountDoesNotChangeTheAnswer) {
  const auto g = corpus::load(corpus::group_source("m22_d10b.g2m"));
  const auto o = orbits_on_nonzero(g);
  for (std::size_t l = 0; l < o.count(); ++l) {
    const auto m = o.members(l);
    const auto one = is_primitive_on_orbit(g, m, 1);
    const auto four = is_primitive_on_orbit(g, m, 4);
    EXPECT_EQ(one.primitive, four.primitive);
    EXPECT_EQ(one.block, four.block);
  }
}

TEST(Primitivity, AgreesWithOraclesOnCorpusOrbits) {
  std::size_t small = 0, tiny = 0;
  for (const auto& s : corpus::group_sources()) {
    if (s.file == "gammal1_d6_r13_e3.g2m") continue;
    const auto g = corpus::load(s);
    if (g.dim() > 8) continue;
    const auto o = orbits_on_nonzero(g);
    for (std::size_t l = 0; l < o.count(); ++l) {
      if (o.sizes[l] > 60) continue;
      const auto m = o.members(l);
      const auto perms = orbit_action(g, m);
      const bool got = is_primitive_on_orbit(g, m).primitive;
      EXPECT_EQ(got, oracles::primitive_by_orbital_graphs(perms, m.size())) << s.file << " orbit " << l;
      ++small;
      if (m.size() <= 16) {
        EXPECT_EQ(got, oracles::primitive_by_block_enumeration(perms, m.size())) << s.file << " orbit " << l;
        ++tiny;
      }
    }
  }
  EXPECT_GT(small, 20U);
  EXPECT_GT(tiny, 10U);
}

TEST(Primitivity, AgreesWithOraclesOnRandomSubgroups) {
  std::size_t imprimitive = 0;
  for (const auto& g : random_subgroups(40, 7)) {
    const auto o = orbits_on_nonzero(g);
    for (std::size_t l = 0; l < o.count(); ++l) {
      if (o.sizes[l] > 60) continue;
      const auto m = o.members(l);
      const auto perms = orbit_action(g, m);
      const bool got = is_primitive_on_orbit(g, m).primitive;
      EXPECT_EQ(got, oracles::primitive_by_orbital_graphs(perms, m.size()));
      if (m.size() <= 16) EXPECT_EQ(got, oracles::primitive_by_block_enumeration(perms, m.size()));
      imprimitive += !got;
    }
  }
  EXPECT_GT(imprimitive, 0U);
}

TEST(Primitivity, TwoTransitiveOrbitsArePrimitive) {
  std::size_t two_transitive = 0;
  for (const auto& s : corpus::group_sources()) {
    if (s.file == "gammal1_d6_r13_e3.g2m") continue;
    const auto g = corpus::load(s);
    if (g.dim() > 8) continue;
    const auto o = orbits_on_nonzero(g);
    for (std::size_t l = 0; l < o.count(); ++l) {
      const auto m = o.members(l);
      if (!oracles::is_two_transitive(orbit_action(g, m), m.size())) continue;
      ++two_transitive;
      EXPECT_TRUE(is_primitive_on_orbit(g, m).primitive) << s.file;
    }
  }
  // at least the natural modules of L_3(2) .. L_8(2) and Alt_7 < L_4(2)
  EXPECT_GE(two_transitive, 7U);
  for (const char* file : {"l3_d3.g2m", "l4_d4.g2m", "l5_d5.g2m", "a7_d4.g2m"}) {
    const auto g = corpus::load(corpus::group_source(file));
    const auto m = orbits_on_nonzero(g).members(0);
    EXPECT_TRUE(oracles::is_two_transitive(orbit_action(g, m), m.size())) << file;
  }
}

TEST(Primitivity, RejectsOversizedOrbits) {
  // prime-sized orbits never need a block search, even when large
  const auto g = groups::build_semilinear(17, 131071, 1).group;
  EXPECT_TRUE(is_primitive_on_orbit(g, orbits_on_nonzero(g).members(0)).primitive);
  // 2^18 - 1 = 3^3 7 19 73 points
  const auto gl = natural(groups::ClassicalFamily::gl, 18);
  std::vector<gf2::Word> everything((std::size_t{1} << 18) - 1);
  std::iota(everything.begin(), everything.end(), 1);
  EXPECT_THROW(is_primitive_on_orbit(gl, everything), ResourceError);
}

TEST(ExtremePrimitivity, SpecExamples) {
  EXPECT_TRUE(is_extremely_primitive(corpus::load(corpus::group_source("a7_d4.g2m"))).is_ep);
  EXPECT_TRUE(is_extremely_primitive(corpus::load(corpus::group_source("m12_d10.g2m"))).is_ep);
  const auto v = is_extremely_primitive(groups::build_semilinear(4, 15, 4).group);
  EXPECT_FALSE(v.is_ep);
  EXPECT_EQ(v.reason, EPReason::imprimitive_orbit);
  ASSERT_TRUE(v.failing_orbit);
  EXPECT_EQ(v.per_orbit.back().label, *v.failing_orbit);
}

TEST(ExtremePrimitivity, ReducibleModule) {
  const auto perm = groups::permutation_module(corpus::load_permutation_source("alt5.perm").generators);
  const auto v = is_extremely_primitive(perm);
  EXPECT_FALSE(v.is_ep);
  EXPECT_EQ(v.reason, EPReason::not_irreducible);
  EXPECT_TRUE(v.per_orbit.empty());
}

TEST(ExtremePrimitivity, StabiliserOrdersMultiplyOut) {
  const auto g = corpus::load(corpus::group_source("m12_d10.g2m"));
  const auto v = is_extremely_primitive(g);
  ASSERT_TRUE(v.is_ep);
  EXPECT_EQ(v.per_orbit.size(), v.orbit_count);
  for (const auto& o : v.per_orbit) {
    ASSERT_TRUE(o.stabiliser_order);
    EXPECT_EQ(*o.stabiliser_order * groups::BigInt(static_cast<unsigned long>(o.size)), *g.order());
  }
}

TEST(ExtremePrimitivity, VerdictIsIrreducibleAndAllOrbitsPrimitive) {
  for (const auto& g : random_subgroups(30, 11)) {
    const auto v = is_extremely_primitive(g);
    bool all = modules::is_irreducible(g.generators()).irreducible;
    if (all) {
      const auto o = orbits_on_nonzero(g);
      for (std::size_t l = 0; l < o.count() && all; ++l) all = is_primitive_on_orbit(g, o.members(l)).primitive;
    }
    EXPECT_EQ(v.is_ep, all);
  }
}
