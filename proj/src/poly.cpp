#include "exprim/poly.hpp"

#include <sstream>

#include "exprim/error.hpp"

namespace exprim::poly {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Poly Poly::constant(const mpq_class& c) { return Poly(std::vector<mpq_class>{c}); }

Poly Poly::x() { return Poly(std::vector<mpq_class>{0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<unsigned long>(i));
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const mpq_class& s, const Poly& a) { return Poly::constant(s) * a; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly q, r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    std::vector<mpq_class> mono(static_cast<std::size_t>(shift) + 1, 0);
    mono.back() = r.leading() / b.leading();
    const Poly t(std::move(mono));
    q += t;
    r -= t * b;
  }
  return {q, r};
}

namespace {

int sign(const mpq_class& q) { return sgn(q); }

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (const int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t Poly::roots_above(const mpq_class& a) const {
  if (is_zero()) throw DomainError("the zero polynomial has infinitely many roots");
  if (eval(a) == 0) throw DomainError("Sturm count requires p(a) != 0");
  std::vector<Poly> seq{*this, derivative()};
  while (!seq.back().is_zero()) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    seq.push_back(-r);
  }
  seq.pop_back();
  std::vector<int> at_a, at_inf;
  for (const auto& p : seq) {
    at_a.push_back(sign(p.eval(a)));
    at_inf.push_back(sign(p.leading()));
  }
  return sign_changes(at_a) - sign_changes(at_inf);
}

bool Poly::positive_from(const mpq_class& a) const {
  if (is_zero() || eval(a) <= 0) return false;
  if (degree() == 0) return true;
  return roots_above(a) == 0;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    mpq_class v = c_[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    v = abs(v);
    first = false;
    const bool unit = v == 1 && i > 0;
    if (!unit) os << v.get_str();
    if (i > 0) os << (unit ? "" : "*") << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

mpq_class RatFun::eval(const mpq_class& x) const {
  const mpq_class d = den.eval(x);
  if (d == 0) throw DomainError("rational function has a pole at the evaluation point");
  return num.eval(x) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RatFun operator*(const RatFun& a, const RatFun& b) { return {a.num * b.num, a.den * b.den}; }

}  // namespace exprim::poly
