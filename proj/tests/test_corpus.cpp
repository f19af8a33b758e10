#include <gtest/gtest.h>

#include <set>

#include "exprim/corpus.hpp"
#include "exprim/error.hpp"

using namespace exprim;
using namespace exprim::corpus;

namespace {

bool buildable(const GroupSource& s) { return s.file != "gammal1_d6_r13_e3.g2m"; }

}  // namespace

TEST(Corpus, NamesAreUnique) {
  std::set<std::string> files;
  for (const auto& s : group_sources()) EXPECT_TRUE(files.insert(s.file).second) << s.file;
  for (const auto& p : permutation_sources()) EXPECT_TRUE(files.insert(p.file).second) << p.file;
  EXPECT_THROW(group_source("nope.g2m"), DomainError);
  EXPECT_THROW(load_permutation_source("nope.perm"), DomainError);
}

TEST(Corpus, UnbuildableEntryThrows) {
  EXPECT_THROW(group_source("gammal1_d6_r13_e3.g2m").build(), DomainError);
  EXPECT_THROW(load(group_source("gammal1_d6_r13_e3.g2m")), DomainError);
}

TEST(Corpus, EveryOtherEntryIsBundled) {
  for (const auto& s : group_sources()) {
    if (!buildable(s)) continue;
    EXPECT_TRUE(std::filesystem::exists(io::data_path(std::filesystem::path("data") / s.file))) << s.file;
  }
}

TEST(Corpus, PermutationSourceOrders) {
  const std::vector<std::pair<std::string, unsigned long>> orders{
      {"m12.perm", 95040},     {"m22.perm", 443520},  {"m22_2.perm", 887040}, {"m23.perm", 10200960},
      {"m24.perm", 244823040}, {"l2_17.perm", 2448},  {"l2_11.perm", 660},    {"alt7.perm", 2520},
      {"sym8.perm", 40320},    {"alt12.perm", 239500800}};
  for (const auto& [file, order] : orders) {
    const auto p = load_permutation_source(file);
    EXPECT_EQ(groups::chain_order(groups::permutation_module(p.generators)), order) << file;
  }
}

TEST(Corpus, RecordedOrdersAreExact) {
  for (const auto& s : group_sources()) {
    if (!buildable(s)) continue;
    const auto g = load(s);
    ASSERT_TRUE(g.order()) << s.file;
    EXPECT_EQ(groups::chain_order(g), *g.order()) << s.file;
  }
}

TEST(Corpus, ClassicalOrdersMatchFormula) {
  for (const auto& s : group_sources()) {
    if (s.part != "ii(b)") continue;
    const auto g = load(s);
    const auto f = s.file[0] == 'l' ? groups::ClassicalFamily::gl : groups::ClassicalFamily::sp;
    EXPECT_EQ(*g.order(), groups::classical_order(f, g.dim())) << s.file;
  }
}

TEST(Corpus, BundledFilesMatchBuilders) {
  // the cheap builders; the full regeneration runs as its own ctest
  for (const char* file : {"a6_d4.g2m", "m12_d10.g2m", "l3_d3.g2m", "sp6_d6.g2m", "gammal1_d4_r5_e2.g2m",
                           "l2_11_d10.g2m", "o6m_d6.g2m"}) {
    const auto& s = group_source(file);
    EXPECT_EQ(io::format_matrix_group(load(s)), io::format_matrix_group(s.build())) << file;
  }
}

TEST(Corpus, ClassDataFilesMatchEnumeration) {
  std::size_t checked = 0;
  for (const auto& s : group_sources()) {
    if (!buildable(s)) continue;
    const auto cls = io::data_path(std::filesystem::path("data") / std::filesystem::path(s.file).replace_extension(".cls"));
    if (!std::filesystem::exists(cls)) continue;
    const auto g = load(s);
    if (*g.order() > 100000) continue;
    EXPECT_EQ(io::load_class_data(cls), groups::prime_order_class_data(g, groups::kDefaultCap)) << s.file;
    ++checked;
  }
  EXPECT_GE(checked, 10U);
}

TEST(Corpus, ClaimsHoldOnEveryEntry) {
  std::size_t claimed = 0;
  for (const auto& s : group_sources()) {
    if (!buildable(s)) continue;
    const auto c = run_ep_check(s);
    ASSERT_TRUE(c.verdict) << s.file << ": " << c.error;
    if (s.listed_positive && s.file == "gammal1_d4_r5_e4.g2m") {
      // the listed (4, 5, 4) entry is imprimitive on its orbit of size 10
      EXPECT_FALSE(c.verdict->is_ep);
      continue;
    }
    if (s.expected_ep) {
      EXPECT_TRUE(c.matches()) << s.file;
      ++claimed;
    }
  }
  EXPECT_GT(claimed, 60U);
}

TEST(Corpus, OnlyOneDualM22ModuleIsEP) {
  for (const char* stem : {"m22", "m22_2"}) {
    const std::string s(stem);
    const bool a = run_ep_check(group_source(s + "_d10a.g2m")).verdict->is_ep;
    const bool b = run_ep_check(group_source(s + "_d10b.g2m")).verdict->is_ep;
    EXPECT_NE(a, b) << stem;
  }
}

TEST(Corpus, EvenDegreeDeletedModulesAreRecorded) {
  for (const auto& s : group_sources()) {
    if (s.part != "even-degree") continue;
    EXPECT_FALSE(s.expected_ep);
    const auto c = run_ep_check(s);
    ASSERT_TRUE(c.verdict) << s.file;
    EXPECT_TRUE(c.matches());
  }
}

TEST(Criteria, Budgets) {
  for (int id = 1; id <= kCriteria; ++id) EXPECT_GT(budget_seconds(id), 0);
  EXPECT_THROW(budget_seconds(0), DomainError);
  EXPECT_THROW(budget_seconds(kCriteria + 1), DomainError);
}

TEST(Criteria, CheapOnesPass) {
  for (const int id : {2, 4, 5, 6, 7, 8}) {
    const auto r = run_criterion(id);
    EXPECT_TRUE(r.passed) << id << ": " << (r.details.empty() ? "" : r.details.back());
    EXPECT_FALSE(r.details.empty());
  }
}
