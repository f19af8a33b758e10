#include "exprim/weyl.hpp"

#include "exprim/error.hpp"

namespace exprim::weyl {

namespace {

BigInt factorial(std::size_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

Weight Weight::parse(std::size_t ell, std::string_view bits) {
  if (bits.size() != ell) {
    throw ParseError("weight needs " + std::to_string(ell) + " coefficients, got " + std::to_string(bits.size()));
  }
  Weight w;
  for (const char c : bits) {
    if (c != '0' && c != '1') throw ParseError("weight coefficients must be 0 or 1");
    w.coeffs.push_back(c == '1' ? 1 : 0);
  }
  return w;
}

bool Weight::is_trivial() const {
  for (const auto c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool Weight::is_unitary_symmetric() const {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != coeffs[coeffs.size() - 1 - i]) return false;
  }
  return true;
}

bool Weight::satisfies_orthogonal_constraint() const {
  return coeffs.size() < 2 || coeffs[coeffs.size() - 2] == coeffs.back();
}

std::string Weight::to_string() const {
  std::string s;
  for (const auto c : coeffs) s.push_back(c ? '1' : '0');
  return s;
}

BigInt weyl_orbit_size(const Weight& w) {
  if (w.ell() == 0) throw DomainError("rank must be at least 1");
  if (w.is_trivial()) throw DomainError("the trivial weight has no meaningful orbit size here");
  BigInt denom = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i <= w.ell(); ++i) {
    if (i < w.ell() && w.coeffs[i] == 0) {
      ++run;
    } else {
      denom *= factorial(run + 1);
      run = 0;
    }
  }
  return factorial(w.ell() + 1) / denom;
}

BigInt symmetric_pair_bound(std::size_t ell, std::size_t k) {
  if (2 * k > ell + 1) throw DomainError("need 2k <= ell + 1");
  return factorial(ell + 1) / (factorial(k) * factorial(k) * factorial(ell - 2 * k + 1));
}

FloorReport unitary_dim_floor_check(std::size_t ell) {
  if (ell < 9) throw DomainError("the floor check is stated for ell >= 9");
  FloorReport r;
  r.ell = ell;
  for (std::size_t k = 2; 2 * k < ell + 1; ++k) {
    BigInt b = symmetric_pair_bound(ell, k);
    if (r.bounds.empty() || b < r.floor) {
      r.floor = b;
      r.minimal_k = k;
    }
    r.bounds.emplace_back(k, std::move(b));
  }
  const BigInt l(static_cast<unsigned long>(ell));
  r.floor_matches_closed_form = 4 * r.floor == l * (l * l - 1) * (l - 2);

  if (ell <= kExhaustiveFloorLimit) {
    r.exhaustive = true;
    // a symmetric weight is fixed by its first ceil(ell/2) coefficients
    const std::size_t half = (ell + 1) / 2;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << half); ++mask) {
      Weight w;
      w.coeffs.assign(ell, 0);
      for (std::size_t i = 0; i < half; ++i) {
        if ((mask >> i) & 1U) w.coeffs[i] = w.coeffs[ell - 1 - i] = 1;
      }
      ++r.weights_checked;
      const bool adjoint = mask == 1;
      const bool middle = ell % 2 == 1 && mask == (std::uint64_t{1} << (half - 1));
      if (adjoint || middle) continue;
      if (weyl_orbit_size(w) < r.floor) r.violations.push_back(w);
    }
  }
  return r;
}

}  // namespace exprim::weyl
