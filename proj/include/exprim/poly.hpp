#pragma once

// Univariate polynomials with rational coefficients and Sturm root counting.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace exprim::poly {

class Poly {
 public:
  Poly() = default;
  /// Coefficients low degree first.
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly constant(const mpq_class& c);
  static Poly x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  mpq_class eval(const mpq_class& x) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const mpq_class& s, const Poly& a);

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  /// Number of distinct real roots in (a, infinity); requires p(a) != 0.
  std::size_t roots_above(const mpq_class& a) const;
  /// p(x) > 0 for every real x >= a.
  bool positive_from(const mpq_class& a) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// A quotient num/den of polynomials.
struct RatFun {
  Poly num = Poly::constant(0);
  Poly den = Poly::constant(1);

  static RatFun of(const Poly& p) { return {p, Poly::constant(1)}; }
  mpq_class eval(const mpq_class& x) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
};

}  // namespace exprim::poly
