#include "exprim/regorbit.hpp"

#include <bit>

#include "exprim/error.hpp"

namespace exprim::regorbit {

using gf2::Word;

std::string to_string(CountingVerdict v) {
  return v == CountingVerdict::regular_orbit_certified ? "regular-orbit-certified" : "inconclusive";
}

std::string to_string(LemmaVerdict v) { return v == LemmaVerdict::not_ep ? "not-EP" : "no-conclusion"; }

RegularOrbitResult regular_orbit_exact(const groups::MatrixGroup& g, const action::OrbitDecomposition& orbits) {
  if (!g.order()) throw DomainError("regular orbit detection needs the group order");
  RegularOrbitResult r;
  for (std::size_t i = 0; i < orbits.count(); ++i) {
    if (BigInt(static_cast<unsigned long>(orbits.sizes[i])) == *g.order()) {
      r.exists = true;
      r.witness = orbits.representatives[i];
      break;
    }
  }
  return r;
}

RegularOrbitResult regular_orbit_exact(const groups::MatrixGroup& g) {
  if (!g.order()) throw DomainError("regular orbit detection needs the group order");
  return regular_orbit_exact(g, action::orbits_on_nonzero(g));
}

bool fixed_space_cover(const groups::MatrixGroup& g, std::uint64_t cap) {
  return fixed_space_cover(groups::ElementTable::enumerate(g, cap));
}

bool fixed_space_cover(const groups::ElementTable& table) {
  const std::size_t d = table.dim();
  const std::size_t n = std::size_t{1} << d;
  std::vector<bool> marked(n, false);
  std::size_t remaining = n - 1;
  for (std::size_t i = 1; i < table.size() && remaining > 0; ++i) {
    if (!groups::is_prime(table.element_order(i))) continue;
    gf2::Matrix xi = table.element(i) + gf2::Matrix::identity(d);
    const auto basis = gf2::kernel_basis(xi);
    std::vector<Word> b;
    for (const auto& v : basis) b.push_back(v.to_word());
    // Gray code walk over the span
    Word v = 0;
    const std::size_t span = std::size_t{1} << b.size();
    for (std::size_t k = 1; k < span; ++k) {
      v ^= b[static_cast<std::size_t>(std::countr_zero(k))];
      if (!marked[v]) {
        marked[v] = true;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

CountingVerdict counting_bound(const groups::ClassData& data, std::size_t d) {
  BigInt sum = 0;
  for (const auto& rec : data.records) {
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 2, rec.fix_dim);
    sum += rec.class_size * pow;
  }
  BigInt lhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, d);
  return lhs > sum ? CountingVerdict::regular_orbit_certified : CountingVerdict::inconclusive;
}

CountingVerdict alpha_criterion(const Rational& h_exp, std::span<const AlphaProfile> profile,
                                std::span<const SpecialClass> special, const Rational& d) {
  bounds::PowerSumProblem p;
  p.lhs_exponent = d;
  auto fix = [&d](const Rational& alpha) {
    if (alpha < 2) throw DomainError("alpha bounds must be at least 2");
    Rational e = (1 - 1 / alpha) * d;
    e.canonicalize();
    return e;
  };
  for (const auto& c : profile) {
    Rational e = c.count_exponent.value_or(h_exp) + fix(c.alpha);
    e.canonicalize();
    p.rhs.push_back({1, e});
  }
  for (const auto& s : special) {
    if (s.count < 0) throw DomainError("class counts must be nonnegative");
    if (s.count == 0) continue;
    p.rhs.push_back({s.count, fix(s.alpha)});
  }
  return bounds::compare_power_sums(p) == bounds::Verdict::holds ? CountingVerdict::regular_orbit_certified
                                                                 : CountingVerdict::inconclusive;
}

LemmaVerdict not_ep_from_regular_orbit(const groups::MatrixGroup& g, bool almost_simple) {
  (void)almost_simple;
  if (!g.order()) throw DomainError("the lemma needs the group order");
  const BigInt& order = *g.order();
  if (order == 1) return LemmaVerdict::no_conclusion;
  // for prime |G| the trivial subgroup is maximal and the regular orbit is primitive
  if (mpz_probab_prime_p(order.get_mpz_t(), 40) != 0) return LemmaVerdict::no_conclusion;
  return regular_orbit_exact(g).exists ? LemmaVerdict::not_ep : LemmaVerdict::no_conclusion;
}

}  // namespace exprim::regorbit
