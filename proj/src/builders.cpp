#include "exprim/builders.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "exprim/error.hpp"
#include "exprim/field.hpp"

namespace exprim::groups {

using gf2::Matrix;
using gf2::Subspace;
using gf2::Vector;
using gf2::Word;

Permutation permutation_from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (const std::size_t x : c) {
      if (x == 0 || x > n) throw DomainError("cycle entry out of range");
      if (used[x - 1]) throw DomainError("cycles must be disjoint");
      used[x - 1] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<char> hit(p.size(), 0);
  for (const std::size_t x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

ClassicalFamily parse_classical_family(std::string_view name) {
  if (name == "gl") return ClassicalFamily::gl;
  if (name == "sp") return ClassicalFamily::sp;
  if (name == "omega+") return ClassicalFamily::omega_plus;
  if (name == "omega-") return ClassicalFamily::omega_minus;
  if (name == "o+") return ClassicalFamily::o_plus;
  if (name == "o-") return ClassicalFamily::o_minus;
  throw DomainError("unknown classical family '" + std::string(name) + "'");
}

std::string to_string(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::gl: return "gl";
    case ClassicalFamily::sp: return "sp";
    case ClassicalFamily::omega_plus: return "omega+";
    case ClassicalFamily::omega_minus: return "omega-";
    case ClassicalFamily::o_plus: return "o+";
    case ClassicalFamily::o_minus: return "o-";
  }
  return "unknown";
}

namespace {

BigInt pow2(std::size_t k) { return BigInt(1) << static_cast<mp_bitcnt_t>(k); }

bool is_minus(ClassicalFamily f) { return f == ClassicalFamily::omega_minus || f == ClassicalFamily::o_minus; }
bool is_omega(ClassicalFamily f) { return f == ClassicalFamily::omega_plus || f == ClassicalFamily::omega_minus; }

void check_classical(ClassicalFamily f, std::size_t dim) {
  if (dim < 2) throw DomainError("classical groups need dimension at least 2");
  if (f != ClassicalFamily::gl && dim % 2 != 0) throw DomainError(to_string(f) + " needs even dimension");
  if (dim > gf2::kWordBits) throw DomainError("classical builders support dimension at most 64");
  if ((f == ClassicalFamily::o_plus || f == ClassicalFamily::omega_plus) && dim == 4) {
    throw DomainError("plus-type orthogonal groups are not offered in dimension 4");
  }
}

/// x -> x + B(x, v) v.
Matrix symplectic_transvection(std::size_t m, Word v) {
  const std::size_t d = 2 * m;
  Matrix t = Matrix::identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (symplectic_form(m, Word{1} << i, v)) t.row_words(i)[0] ^= v;
  }
  return t;
}

Matrix word_product(std::span<const Matrix> pool, std::size_t count, std::mt19937_64& rng) {
  Matrix g = pool[rng() % pool.size()];
  for (std::size_t i = 1; i < count; ++i) g = g * pool[rng() % pool.size()];
  return g;
}

MatrixGroup build_gl(std::size_t d) {
  Matrix t = Matrix::identity(d);
  t.set(0, 1, true);
  Permutation cycle(d);
  for (std::size_t i = 0; i < d; ++i) cycle[i] = (i + 1) % d;
  return MatrixGroup({t, Matrix::permutation(cycle)});
}

MatrixGroup build_sp(std::size_t m) {
  std::vector<Word> chain;
  for (std::size_t i = 0; i < m; ++i) {
    chain.push_back(Word{1} << i);
    const Word f = Word{1} << (m + i);
    chain.push_back(i + 1 < m ? (f | (Word{1} << (i + 1))) : f);
  }
  Matrix c = Matrix::identity(2 * m);
  for (const Word v : chain) c = c * symplectic_transvection(m, v);
  return MatrixGroup({c, symplectic_transvection(m, Word{1} << m)});
}

MatrixGroup build_orthogonal(ClassicalFamily f, std::size_t m, const BigInt& order) {
  const std::size_t d = 2 * m;
  if (order == 1) return MatrixGroup({Matrix::identity(d)});
  const bool minus = is_minus(f);
  std::vector<Matrix> reflections;
  for (Word v = 1; v < (Word{1} << d); ++v) {
    if (quadratic_form(minus, m, v)) reflections.push_back(symplectic_transvection(m, v));
  }
  std::mt19937_64 rng(0x6f72746fULL + d + (minus ? 1 : 0));
  const bool even = is_omega(f);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<Matrix> gens;
    for (int k = 0; k < 2; ++k) {
      std::size_t count = 1 + rng() % (2 * m + 1);
      if ((count % 2 == 0) != even) ++count;
      gens.push_back(word_product(reflections, count, rng));
    }
    if (StabiliserChain(gens).order() == order) return MatrixGroup(std::move(gens));
  }
  throw ResourceError("no generating pair found for " + to_string(f) + " in dimension " + std::to_string(d));
}

/// Determinant over F_2 of the k x k submatrix on rows rs and columns cs.
bool minor(const Matrix& g, std::span<const std::size_t> rs, std::span<const std::size_t> cs) {
  const std::size_t k = rs.size();
  Matrix sub(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub.set(i, j, g.get(rs[i], cs[j]));
  return gf2::rank(sub) == k;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

bool quadratic_form(bool minus, std::size_t m, Word x) {
  bool q = false;
  for (std::size_t i = 0; i < m; ++i) q ^= ((x >> i) & (x >> (m + i)) & 1U) != 0;
  if (minus) q ^= (((x >> (m - 1)) ^ (x >> (2 * m - 1))) & 1U) != 0;
  return q;
}

bool symplectic_form(std::size_t m, Word x, Word y) {
  const Word mask = (Word{1} << m) - 1;
  const Word swapped = ((y & mask) << m) | ((y >> m) & mask);
  return (std::popcount(x & swapped) & 1) != 0;
}

BigInt classical_order(ClassicalFamily f, std::size_t dim) {
  check_classical(f, dim);
  BigInt n = 1;
  if (f == ClassicalFamily::gl) {
    for (std::size_t i = 0; i < dim; ++i) n *= pow2(dim) - pow2(i);
    return n;
  }
  const std::size_t m = dim / 2;
  if (f == ClassicalFamily::sp) {
    n = pow2(m * m);
    for (std::size_t i = 1; i <= m; ++i) n *= pow2(2 * i) - 1;
    return n;
  }
  const BigInt top = is_minus(f) ? BigInt(pow2(m) + 1) : BigInt(pow2(m) - 1);
  n = 2 * pow2(m * (m - 1)) * top;
  for (std::size_t i = 1; i < m; ++i) n *= pow2(2 * i) - 1;
  return is_omega(f) ? BigInt(n / 2) : n;
}

MatrixGroup build_classical(ClassicalFamily f, std::size_t dim) {
  const BigInt order = classical_order(f, dim);
  MatrixGroup g;
  if (f == ClassicalFamily::gl) {
    g = build_gl(dim);
  } else if (f == ClassicalFamily::sp) {
    g = build_sp(dim / 2);
  } else {
    g = build_orthogonal(f, dim / 2, order);
  }
  const char* names[] = {"L", "Sp", "Omega+", "Omega-", "O+", "O-"};
  return g.with_order(order).with_name(std::string(names[static_cast<int>(f)]) + "_" + std::to_string(dim) + "(2)");
}

MatrixGroup permutation_module(std::span<const Permutation> perms) {
  if (perms.empty()) throw DomainError("at least one permutation is required");
  std::vector<Matrix> gens;
  for (const auto& p : perms) {
    if (p.size() != perms.front().size() || !is_permutation(p)) throw DomainError("invalid permutation");
    gens.push_back(Matrix::permutation(p));
  }
  return MatrixGroup(std::move(gens));
}

MatrixGroup build_deleted_perm_module(std::span<const Permutation> perms) {
  const MatrixGroup perm = permutation_module(perms);
  const std::size_t n = perm.dim();
  if (n < 3) throw DomainError("deleted permutation modules need at least 3 points");
  Subspace sum_zero(n);
  for (std::size_t i = 0; i + 1 < n; ++i) sum_zero.insert(Vector::unit(n, i) ^ Vector::unit(n, i + 1));
  auto gens = modules::restrict_to_subspace(perm.generators(), sum_zero);
  if (n % 2 == 0) {
    Subspace ones(n - 1);
    ones.insert(sum_zero.coordinates(Vector::all_ones(n)));
    gens = modules::quotient_action(gens, ones);
  }
  return MatrixGroup(std::move(gens));
}

SemilinearGroup build_semilinear(unsigned d, std::uint64_t r, unsigned e) {
  if (d == 0 || d > 32) throw DomainError("semilinear groups need 1 <= d <= 32");
  if (e == 0 || d % e != 0) throw DomainError("e must divide d");
  const field::Field f(d);
  if (r == 0 || f.order() % r != 0) throw DomainError("r must divide 2^d - 1");
  SemilinearGroup out;
  out.r_prime = is_prime(r);
  out.r_ppd = out.r_prime && r > 2 && field::order_of_two_mod(r) == d;
  const std::uint64_t omega = f.pow(d == 1 ? 1 : 2, f.order() / r);
  std::vector<Matrix> gens{f.multiplication_matrix(omega)};
  if (e > 1) gens.push_back(f.frobenius_matrix(d / e));
  out.group = MatrixGroup(std::move(gens), BigInt(static_cast<unsigned long>(r)) * e,
                          "GammaL_1(" + std::to_string(d) + "," + std::to_string(r) + "," + std::to_string(e) + ")");
  return out;
}

MatrixGroup exterior_power(const MatrixGroup& g, std::size_t k) {
  const std::size_t n = g.dim();
  if (k == 0 || k > n) throw DomainError("exterior power degree must be in 1..dim");
  const auto basis = subsets(n, k);
  std::vector<Matrix> gens;
  for (const auto& m : g.generators()) {
    Matrix out(basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t t = 0; t < basis.size(); ++t) out.set(s, t, minor(m, basis[s], basis[t]));
    gens.push_back(std::move(out));
  }
  return MatrixGroup(std::move(gens));
}

Matrix random_element(const MatrixGroup& g, std::mt19937_64& rng, std::size_t length) {
  return word_product(g.generators(), std::max<std::size_t>(1, length), rng);
}

std::optional<MatrixGroup> find_subgroup(const MatrixGroup& g, const BigInt& order, std::uint64_t seed,
                                         std::size_t attempts,
                                         const std::function<bool(const MatrixGroup&)>& accept) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < attempts; ++i) {
    std::vector<Matrix> gens{random_element(g, rng), random_element(g, rng)};
    if (StabiliserChain(gens).order() != order) continue;
    MatrixGroup h(std::move(gens), order);
    if (!accept || accept(h)) return h;
  }
  return std::nullopt;
}

std::vector<MatrixGroup> constituents_of_dim(const MatrixGroup& g, std::size_t dim,
                                             const modules::MeatAxeOptions& options) {
  std::vector<MatrixGroup> out;
  for (auto& c : modules::chop(g.generators(), options)) {
    if (c.dim == dim) out.emplace_back(std::move(c.gens));
  }
  return out;
}

}  // namespace exprim::groups
