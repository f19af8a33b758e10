#include "exprim/modules.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "exprim/error.hpp"

namespace exprim::modules {

using gf2::Matrix;
using gf2::Subspace;
using gf2::Vector;

namespace {

std::size_t check_generators(std::span<const Matrix> gens) {
  if (gens.empty()) throw DomainError("at least one generator is required");
  const std::size_t d = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.dim() != d) throw DomainError("generators must be square of equal dimension");
  }
  if (d == 0) throw DomainError("module dimension must be positive");
  return d;
}

std::vector<Matrix> transposes(std::span<const Matrix> gens) {
  std::vector<Matrix> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

IrreducibilityResult reducible(Subspace witness, IrreducibilityMethod method) {
  return {false, std::move(witness), method};
}

/// Random element of the group algebra: a short sum of random generator words.
Matrix random_algebra_element(std::span<const Matrix> gens, std::size_t max_len, std::mt19937_64& rng) {
  const std::size_t d = gens.front().dim();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> terms(1, 3);
  Matrix sum(d);
  const std::size_t t = terms(rng);
  for (std::size_t i = 0; i < t; ++i) {
    Matrix word = gens[pick(rng)];
    const std::size_t l = len(rng);
    for (std::size_t k = 1; k < l; ++k) word = word * gens[pick(rng)];
    sum += word;
  }
  // random identity shift
  if (rng() & 1U) sum += Matrix::identity(d);
  return sum;
}

}  // namespace

std::string to_string(IrreducibilityMethod m) {
  switch (m) {
    case IrreducibilityMethod::trivial: return "trivial";
    case IrreducibilityMethod::norton: return "norton";
    case IrreducibilityMethod::exhaustive: return "exhaustive";
  }
  return "unknown";
}

Subspace spin(std::span<const Matrix> gens, const Vector& v) {
  const std::size_t d = check_generators(gens);
  if (v.dim() != d) throw DomainError("spin: vector dimension does not match generators");
  if (v.is_zero()) throw DomainError("spin: vector must be nonzero");
  Subspace s(d);
  s.insert(v);
  std::deque<Vector> queue{v};
  while (!queue.empty() && !s.is_full()) {
    const Vector w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Vector u = g.apply(w);
      if (s.insert(u)) queue.push_back(std::move(u));
    }
  }
  return s;
}

IrreducibilityResult is_irreducible_exhaustive(std::span<const Matrix> gens) {
  const std::size_t d = check_generators(gens);
  if (d == 1) return {true, std::nullopt, IrreducibilityMethod::trivial};
  if (d > 30) throw ResourceError("exhaustive spin is limited to dimension 30");
  const gf2::Word last = (gf2::Word{1} << d) - 1;
  for (gf2::Word bits = 1; bits <= last; ++bits) {
    Subspace s = spin(gens, Vector::from_word(d, bits));
    if (!s.is_full()) return reducible(std::move(s), IrreducibilityMethod::exhaustive);
  }
  return {true, std::nullopt, IrreducibilityMethod::exhaustive};
}

Subspace annihilator(const Subspace& dual_sub) {
  const std::size_t d = dual_sub.ambient();
  if (dual_sub.is_zero()) {
    Subspace all(d);
    for (std::size_t i = 0; i < d; ++i) all.insert(Vector::unit(d, i));
    return all;
  }
  const auto ker = gf2::kernel_basis(dual_sub.basis_matrix().transpose());
  return Subspace::span(d, ker);
}

IrreducibilityResult is_irreducible(std::span<const Matrix> gens, const MeatAxeOptions& options) {
  const std::size_t d = check_generators(gens);
  if (d == 1) return {true, std::nullopt, IrreducibilityMethod::trivial};

  const auto dual_gens = transposes(gens);
  std::mt19937_64 rng(options.seed);
  std::size_t word_len = std::max<std::size_t>(1, options.max_word_length);

  for (std::size_t round = 0; round < options.rounds; ++round, word_len *= 2) {
    for (std::size_t attempt = 0; attempt < options.budget; ++attempt) {
      const Matrix a = random_algebra_element(gens, word_len, rng);
      const auto null = gf2::kernel_basis(a);
      if (null.empty()) continue;

      // A single kernel vector spinning to a proper subspace settles it.
      Subspace first = spin(gens, null.front());
      if (!first.is_full()) return reducible(std::move(first), IrreducibilityMethod::norton);
      if (null.size() > options.max_null_enumeration) continue;

      // Norton: every kernel vector of A must spin to V ...
      const gf2::Word combos = (gf2::Word{1} << null.size()) - 1;
      for (gf2::Word mask = 2; mask <= combos; ++mask) {
        Vector v(d);
        for (std::size_t i = 0; i < null.size(); ++i) {
          if ((mask >> i) & 1U) v ^= null[i];
        }
        Subspace s = spin(gens, v);
        if (!s.is_full()) return reducible(std::move(s), IrreducibilityMethod::norton);
      }
      // ... and one kernel vector of A^T must spin to the dual module.
      const auto dual_null = gf2::kernel_basis(a.transpose());
      Subspace dual = spin(dual_gens, dual_null.front());
      if (!dual.is_full()) return reducible(annihilator(dual), IrreducibilityMethod::norton);
      return {true, std::nullopt, IrreducibilityMethod::norton};
    }
  }

  if (d <= options.exhaustive_threshold) return is_irreducible_exhaustive(gens);
  throw ResourceError("MeatAxe search budget exhausted without a certificate (dimension " + std::to_string(d) +
                      ")");
}

std::vector<Matrix> restrict_to_subspace(std::span<const Matrix> gens, const Subspace& sub) {
  const std::size_t k = sub.dim();
  if (k == 0) throw DomainError("cannot restrict to the zero subspace");
  std::vector<Matrix> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    Matrix m(k);
    for (std::size_t i = 0; i < k; ++i) m.set_row(i, sub.coordinates(g.apply(sub.basis()[i])));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> quotient_action(std::span<const Matrix> gens, const Subspace& sub) {
  const std::size_t d = sub.ambient();
  if (sub.dim() >= d) throw DomainError("cannot form the quotient by the whole space");
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> position(d, d);
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < d; ++c) {
      if (p < sub.pivots().size() && sub.pivots()[p] == c) {
        ++p;
      } else {
        position[c] = free_cols.size();
        free_cols.push_back(c);
      }
    }
  }
  const std::size_t q = free_cols.size();
  std::vector<Matrix> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    Matrix m(q);
    for (std::size_t i = 0; i < q; ++i) {
      const Vector image = sub.reduce(g.apply(Vector::unit(d, free_cols[i])));
      for (std::size_t c = 0; c < d; ++c) {
        if (image.get(c)) m.set(i, position[c], true);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Constituent> chop(std::span<const Matrix> gens, const MeatAxeOptions& options) {
  const std::size_t d = check_generators(gens);
  auto result = is_irreducible(gens, options);
  if (result.irreducible) return {Constituent{d, {gens.begin(), gens.end()}}};
  const Subspace& sub = *result.witness;
  auto lower = chop(restrict_to_subspace(gens, sub), options);
  auto upper = chop(quotient_action(gens, sub), options);
  lower.insert(lower.end(), std::make_move_iterator(upper.begin()), std::make_move_iterator(upper.end()));
  return lower;
}

}  // namespace exprim::modules
