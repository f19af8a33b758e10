#pragma once

// Exact decisions of 2^L > sum c_i 2^{e_i} for rational exponents, a tail
// certifier for rank-parameterised families, and the catalog of named bounds.

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exprim/poly.hpp"

namespace exprim::bounds {

using BigInt = mpz_class;
using Rational = mpq_class;

struct Term {
  BigInt coeff;
  Rational exponent;
};

struct PowerSumProblem {
  Rational lhs_exponent;
  std::vector<Term> rhs;
};

enum class Verdict { holds, fails };
std::string to_string(Verdict v);

/// Decides 2^lhs > sum coeff * 2^exponent exactly. Intervals at increasing
/// precision settle almost every instance; otherwise the difference is
/// written over the basis 1, theta, ..., theta^{D-1} of Q(theta), theta = 2^{1/D},
/// which decides it outright when at most one residue class survives, and
/// bounds the precision needed to separate it from zero in general.
Verdict compare_power_sums(const PowerSumProblem& p);

/// Interval stage only, at a fixed working precision; nullopt when the
/// enclosure does not separate.
std::optional<Verdict> compare_power_sums_at_precision(const PowerSumProblem& p, long bits);

// ---------------------------------------------------------------------------
// Catalog

/// Exponent a(x) + b(x)*d with coefficient c(x) <= 2^{coeff_bits(x)}.
struct TermFamily {
  poly::RatFun a;
  poly::RatFun b;
  poly::Poly coeff_bits;
};

/// Parameter values of one parity (or all of them) with d = dim(x).
struct Branch {
  int parity = -1;  // -1 any, 0 even, 1 odd
  poly::Poly dim;
};

struct Family {
  std::vector<Branch> branches;
  std::vector<TermFamily> terms;
};

struct Instance {
  Rational d;
  PowerSumProblem problem;
  /// Every right-hand exponent has d-coefficient < 1, so the verdict
  /// "holds" persists for every larger d.
  bool monotone_in_d = false;
};

struct CatalogEntry {
  std::string name;
  std::string parameter;  // "ell" or "d"
  long min_param = 1;
  int parity = -1;
  std::string description;
  std::function<Instance(long)> instantiate;
  /// The claimed verdict at x, where one is claimed.
  std::function<std::optional<Verdict>(long)> claimed;
  std::optional<Family> family;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view name);

enum class TailVerdict { certified, unchecked };
std::string to_string(TailVerdict v);

struct PointResult {
  long param = 0;
  Rational d;
  Verdict verdict = Verdict::fails;
  std::optional<Verdict> claimed;
  bool monotone_in_d = false;
  bool agrees() const { return !claimed || *claimed == verdict; }
};

struct BoundReport {
  std::string name;
  std::string parameter;
  std::vector<PointResult> points;
  std::optional<TailVerdict> tail;
};

/// Point verdicts for every admissible parameter in [lo, hi]; values of the
/// wrong parity are skipped. Throws for unknown names, lo below the domain,
/// or an empty admissible range.
BoundReport certify_named_bound(std::string_view name, long lo, long hi);

struct GapCheck {
  int parity = -1;
  std::size_t term = 0;
  poly::RatFun gap;
  Rational gap_at_start;
  /// "monotone" (G(x0) >= 1 and G' >= 0), "positive" (G - 1 > 0 throughout) or "failed".
  std::string method;
};

struct TailResult {
  TailVerdict verdict = TailVerdict::unchecked;
  std::string reason;
  std::vector<GapCheck> gaps;
};

/// Certifies the entry for every admissible parameter >= x0 by term-wise
/// dominance: G_i = d - e_i - coeff_bits_i - ceil(log2 k) >= 1 for all
/// real x >= x0 on each branch. Never claims failure. Throws for entries
/// without a polynomial family once the point precheck has passed.
TailResult tail_certify(std::string_view name, long x0);

}  // namespace exprim::bounds
