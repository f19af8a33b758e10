#include "exprim/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>

#include "exprim/error.hpp"

namespace exprim::bounds {

std::string to_string(Verdict v) { return v == Verdict::holds ? "holds" : "fails"; }
std::string to_string(TailVerdict v) { return v == TailVerdict::certified ? "certified-for-all-beyond" : "unchecked"; }

namespace {

class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void widen_exponent_range() {
  static const bool done = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)done;
}

/// Adds the enclosure of c * 2^x to [lo, hi].
void add_term(mpfr_ptr lo, mpfr_ptr hi, const BigInt& c, const Rational& x, long bits) {
  Mpfr tlo(bits), thi(bits);
  mpfr_set_q(tlo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(thi.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_exp2(tlo.get(), tlo.get(), MPFR_RNDD);
  mpfr_exp2(thi.get(), thi.get(), MPFR_RNDU);
  mpfr_mul_z(tlo.get(), tlo.get(), c.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(thi.get(), thi.get(), c.get_mpz_t(), MPFR_RNDU);
  mpfr_add(lo, lo, tlo.get(), MPFR_RNDD);
  mpfr_add(hi, hi, thi.get(), MPFR_RNDU);
}

void validate(const PowerSumProblem& p) {
  for (const auto& t : p.rhs) {
    if (t.coeff <= 0) throw DomainError("power-sum coefficients must be positive");
  }
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::optional<Verdict> compare_power_sums_at_precision(const PowerSumProblem& p, long bits) {
  validate(p);
  if (p.rhs.empty()) return Verdict::holds;
  widen_exponent_range();
  Mpfr lo(bits), hi(bits);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const auto& t : p.rhs) add_term(lo.get(), hi.get(), t.coeff, t.exponent - p.lhs_exponent, bits);
  // the sum is compared against 2^0 = 1
  if (mpfr_cmp_ui(hi.get(), 1) < 0) return Verdict::holds;
  if (mpfr_cmp_ui(lo.get(), 1) >= 0) return Verdict::fails;
  return std::nullopt;
}

Verdict compare_power_sums(const PowerSumProblem& p) {
  validate(p);
  if (p.rhs.empty()) return Verdict::holds;
  for (long bits = 64; bits <= 4096; bits *= 2) {
    if (auto v = compare_power_sums_at_precision(p, bits)) return *v;
  }

  // Exact stage: 2^{n/D} = 2^a * theta^r with n = aD + r, 0 <= r < D.
  BigInt D = 1;
  auto absorb = [&D](const Rational& q) { mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t()); };
  absorb(p.lhs_exponent);
  for (const auto& t : p.rhs) absorb(t.exponent);
  if (!D.fits_ulong_p()) throw ResourceError("exponent denominators are too large");

  struct Part {
    BigInt a;
    unsigned long r;
    BigInt coeff;
  };
  std::vector<Part> parts;
  auto split = [&](const Rational& q, const BigInt& coeff) {
    const BigInt n = q.get_num() * (D / q.get_den());
    const BigInt a = floor_div(n, D);
    const BigInt r = n - a * D;
    parts.push_back({a, r.get_ui(), coeff});
  };
  split(p.lhs_exponent, 1);
  for (const auto& t : p.rhs) split(t.exponent, -t.coeff);
  BigInt amin = parts.front().a;
  for (const auto& part : parts) amin = std::min(amin, part.a);
  std::map<unsigned long, BigInt> A;
  for (const auto& part : parts) {
    const BigInt shift = part.a - amin;
    if (!shift.fits_ulong_p()) throw ResourceError("exponent spread is too large for exact comparison");
    A[part.r] += part.coeff << static_cast<mp_bitcnt_t>(shift.get_ui());
  }
  std::erase_if(A, [](const auto& kv) { return kv.second == 0; });
  if (A.empty()) return Verdict::fails;  // equality is not strict
  if (A.size() == 1) return A.begin()->second > 0 ? Verdict::holds : Verdict::fails;

  // A nonzero element of Z[theta] has |norm| >= 1, and each conjugate is at
  // most B = sum |A_r| theta^r < 2 sum |A_r|, so |value| >= B^{1-D}.
  BigInt total = 0;
  for (const auto& [r, c] : A) total += abs(c);
  const std::size_t log_b = mpz_sizeinbase(total.get_mpz_t(), 2) + 1;
  const unsigned long dd = D.get_ui();
  const long needed = static_cast<long>(dd * log_b + 64 + 2 * mpz_sizeinbase(D.get_mpz_t(), 2));
  widen_exponent_range();
  for (long bits = 256;; bits = std::min(2 * bits, needed)) {
    Mpfr lo(bits), hi(bits);
    mpfr_set_zero(lo.get(), 1);
    mpfr_set_zero(hi.get(), 1);
    for (const auto& [r, c] : A) {
      Rational x(static_cast<long>(r), dd);
      x.canonicalize();
      if (c > 0) {
        add_term(lo.get(), hi.get(), c, x, bits);
      } else {
        // subtracting |c| theta^r: lower end takes the upper enclosure
        Mpfr nlo(bits), nhi(bits);
        mpfr_set_zero(nlo.get(), 1);
        mpfr_set_zero(nhi.get(), 1);
        add_term(nlo.get(), nhi.get(), BigInt(-c), x, bits);
        mpfr_sub(lo.get(), lo.get(), nhi.get(), MPFR_RNDD);
        mpfr_sub(hi.get(), hi.get(), nlo.get(), MPFR_RNDU);
      }
    }
    if (mpfr_sgn(lo.get()) > 0) return Verdict::holds;
    if (mpfr_sgn(hi.get()) < 0) return Verdict::fails;
    if (bits >= needed) throw ResourceError("power-sum comparison did not separate at the proven precision");
  }
}

// ---------------------------------------------------------------------------
// Reports

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown bound '" + std::string(name) + "'");
}

namespace {

bool admissible(const CatalogEntry& e, long x) {
  return x >= e.min_param && (e.parity < 0 || ((x % 2) + 2) % 2 == e.parity);
}

PointResult evaluate_point(const CatalogEntry& e, long x) {
  const Instance inst = e.instantiate(x);
  PointResult r;
  r.param = x;
  r.d = inst.d;
  r.verdict = compare_power_sums(inst.problem);
  r.claimed = e.claimed(x);
  r.monotone_in_d = inst.monotone_in_d;
  return r;
}

}  // namespace

BoundReport certify_named_bound(std::string_view name, long lo, long hi) {
  const CatalogEntry& e = catalog_entry(name);
  if (lo < e.min_param) {
    throw DomainError(e.name + ": parameter " + std::to_string(lo) + " is below the domain start " +
                      std::to_string(e.min_param));
  }
  if (hi < lo) throw DomainError("empty parameter range");
  BoundReport report;
  report.name = e.name;
  report.parameter = e.parameter;
  for (long x = lo; x <= hi; ++x) {
    if (admissible(e, x)) report.points.push_back(evaluate_point(e, x));
  }
  if (report.points.empty()) throw DomainError(e.name + ": no admissible parameter in the range");
  return report;
}

TailResult tail_certify(std::string_view name, long x0) {
  const CatalogEntry& e = catalog_entry(name);
  if (x0 < e.min_param) throw DomainError(e.name + ": tail start is below the domain");
  TailResult out;

  // A family whose first admissible values already fail cannot be dominated.
  std::size_t checked = 0;
  for (long x = x0; checked < 4; ++x) {
    if (!admissible(e, x)) continue;
    ++checked;
    if (evaluate_point(e, x).verdict == Verdict::fails) {
      out.reason = "point check fails at " + e.parameter + " = " + std::to_string(x);
      return out;
    }
  }
  if (!e.family) throw DomainError(e.name + ": entry lacks a polynomial family form");

  const auto& fam = *e.family;
  const std::size_t k = fam.terms.size();
  std::size_t kbits = 0;
  while ((std::size_t{1} << kbits) < k) ++kbits;
  const Rational start(x0);
  bool ok = true;
  for (const auto& branch : fam.branches) {
    const poly::RatFun D = poly::RatFun::of(branch.dim);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& t = fam.terms[i];
      poly::RatFun g = D - (t.a + t.b * D) - poly::RatFun::of(t.coeff_bits + poly::Poly::constant(Rational(kbits)));
      GapCheck check{branch.parity, i, g, 0, "failed"};
      if (!g.den.positive_from(start)) {
        if ((-g.den).positive_from(start)) {
          g = {-g.num, -g.den};
          check.gap = g;
        } else {
          out.gaps.push_back(check);
          ok = false;
          continue;
        }
      }
      check.gap_at_start = g.eval(start);
      const poly::Poly slope = g.num.derivative() * g.den - g.num * g.den.derivative();
      if (check.gap_at_start >= 1 && (slope.is_zero() || slope.positive_from(start))) {
        check.method = "monotone";
      } else if ((g.num - g.den).positive_from(start)) {
        check.method = "positive";
      } else {
        ok = false;
      }
      out.gaps.push_back(check);
    }
  }
  out.verdict = ok ? TailVerdict::certified : TailVerdict::unchecked;
  out.reason = ok ? "every gap is at least 1 from the start" : "dominance could not be established";
  return out;
}

}  // namespace exprim::bounds
