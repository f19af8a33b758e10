#include "exprim/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <tuple>

#include "exprim/error.hpp"

namespace exprim::groups {

using gf2::Matrix;
using gf2::Word;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("EXPRIM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

MatrixGroup::MatrixGroup(std::vector<Matrix> generators, std::optional<BigInt> order, std::string name)
    : generators_(std::move(generators)), order_(std::move(order)), name_(std::move(name)) {
  if (generators_.empty()) throw DomainError("a matrix group needs at least one generator");
  dim_ = generators_.front().rows();
  if (dim_ == 0) throw DomainError("matrix group dimension must be positive");
  for (const auto& g : generators_) {
    if (!g.is_square() || g.dim() != dim_) throw DomainError("generators must be square of equal dimension");
    if (!gf2::is_invertible(g)) throw DomainError("generators must be invertible");
  }
  if (order_ && *order_ <= 0) throw DomainError("group order must be positive");
}

MatrixGroup MatrixGroup::with_order(BigInt order) const {
  MatrixGroup g = *this;
  if (order <= 0) throw DomainError("group order must be positive");
  g.order_ = std::move(order);
  return g;
}

MatrixGroup MatrixGroup::with_name(std::string name) const {
  MatrixGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------
// Stabiliser chain

namespace {

Word apply_word(const Matrix& m, Word v) {
  Word out = 0;
  for (std::size_t i = 0; v != 0; ++i, v >>= 1) {
    if (v & 1U) out ^= m.row_word(i);
  }
  return out;
}

}  // namespace

StabiliserChain::StabiliserChain(std::span<const Matrix> generators, std::uint64_t max_points)
    : max_points_(max_points) {
  if (generators.empty()) throw DomainError("stabiliser chain needs at least one generator");
  dim_ = generators.front().dim();
  if (dim_ == 0 || dim_ > gf2::kWordBits) throw DomainError("stabiliser chain supports dimensions 1..64");
  levels_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) levels_[i].base = Word{1} << i;

  // A generator joins every level up to the first base point it moves.
  for (const auto& g : generators) {
    if (g.dim() != dim_) throw DomainError("generators must have equal dimension");
    if (g.is_identity()) continue;
    std::size_t j = 0;
    while (g.row_word(j) == levels_[j].base) ++j;
    for (std::size_t l = 0; l <= j; ++l) levels_[l].gens.push_back(g);
  }
  for (auto& level : levels_) rebuild_orbit(level);

  std::size_t i = dim_ - 1;
  while (true) {
    bool restarted = false;
    Level& level = levels_[i];
    for (std::size_t p = 0; p < level.points.size() && !restarted; ++p) {
      for (std::size_t s = 0; s < level.gens.size(); ++s) {
        const Word image = apply_word(level.gens[s], level.points[p]);
        const std::size_t q = level.index.at(image);
        Matrix h = level.reps[p] * level.gens[s] * level.reps_inv[q];
        auto [residue, j] = sift(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        // residue fixes the bases of levels i..j-1 and moves that of level j
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = j;
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

void StabiliserChain::rebuild_orbit(Level& level) {
  total_points_ -= level.points.size();
  level.index.clear();
  level.points.assign(1, level.base);
  level.reps.assign(1, Matrix::identity(dim_));
  level.reps_inv.assign(1, Matrix::identity(dim_));
  level.index.emplace(level.base, 0);
  std::vector<Matrix> inverses;
  inverses.reserve(level.gens.size());
  for (const auto& g : level.gens) inverses.push_back(gf2::inverse(g));
  for (std::size_t p = 0; p < level.points.size(); ++p) {
    for (std::size_t s = 0; s < level.gens.size(); ++s) {
      const Word image = apply_word(level.gens[s], level.points[p]);
      if (level.index.contains(image)) continue;
      if (total_points_ + level.points.size() >= max_points_) {
        throw ResourceError("stabiliser chain exceeds " + std::to_string(max_points_) + " stored points");
      }
      level.index.emplace(image, level.points.size());
      level.points.push_back(image);
      level.reps.push_back(level.reps[p] * level.gens[s]);
      level.reps_inv.push_back(inverses[s] * level.reps_inv[p]);
    }
  }
  total_points_ += level.points.size();
}

std::pair<Matrix, std::size_t> StabiliserChain::sift(Matrix g, std::size_t from) const {
  for (std::size_t l = from; l < dim_; ++l) {
    const Level& level = levels_[l];
    const Word image = g.row_word(l);
    const auto it = level.index.find(image);
    if (it == level.index.end()) return {std::move(g), l};
    g = g * level.reps_inv[it->second];
  }
  return {std::move(g), dim_};
}

BigInt StabiliserChain::order() const {
  BigInt n = 1;
  for (const auto& level : levels_) n *= static_cast<unsigned long>(level.points.size());
  return n;
}

bool StabiliserChain::contains(const Matrix& g) const {
  if (!g.is_square() || g.dim() != dim_) return false;
  return sift(g, 0).first.is_identity();
}

std::vector<std::size_t> StabiliserChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.points.size());
  return out;
}

BigInt chain_order(const MatrixGroup& g) { return StabiliserChain(g.generators()).order(); }

// ---------------------------------------------------------------------------
// Element table

namespace {

constexpr std::size_t kMaxTableDim = 16;

inline Word row_times(std::span<const Word> rows, Word v) {
  Word out = 0;
  for (std::size_t i = 0; v != 0; ++i, v >>= 1) {
    if (v & 1U) out ^= rows[i];
  }
  return out;
}

inline std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

void ElementTable::pack(std::span<const Word> rows, std::span<Word> key) const {
  std::fill(key.begin(), key.end(), 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    const std::size_t bit = r * dim_;
    key[bit / gf2::kWordBits] |= rows[r] << (bit % gf2::kWordBits);
    const std::size_t spill = bit % gf2::kWordBits + dim_;
    if (spill > gf2::kWordBits) key[bit / gf2::kWordBits + 1] |= rows[r] >> (gf2::kWordBits - bit % gf2::kWordBits);
  }
}

void ElementTable::unpack(std::size_t i, std::span<Word> rows) const {
  const Word* key = data_.data() + i * words_;
  const Word mask = (Word{1} << dim_) - 1;
  for (std::size_t r = 0; r < dim_; ++r) {
    const std::size_t bit = r * dim_;
    const std::size_t off = bit % gf2::kWordBits;
    Word v = key[bit / gf2::kWordBits] >> off;
    if (off + dim_ > gf2::kWordBits) v |= key[bit / gf2::kWordBits + 1] << (gf2::kWordBits - off);
    rows[r] = v & mask;
  }
}

std::uint64_t ElementTable::hash(std::span<const Word> key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const Word w : key) h = mix(h ^ w);
  return h;
}

std::optional<std::size_t> ElementTable::lookup(std::span<const Word> key) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(key) & mask;; s = (s + 1) & mask) {
    const std::uint32_t slot = slots_[s];
    if (slot == 0) return std::nullopt;
    const Word* stored = data_.data() + (slot - 1) * words_;
    if (std::equal(key.begin(), key.end(), stored)) return slot - 1;
  }
}

std::size_t ElementTable::insert(std::span<const Word> key) {
  if (2 * (count_ + 1) > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(key) & mask;
  while (slots_[s] != 0) s = (s + 1) & mask;
  data_.insert(data_.end(), key.begin(), key.end());
  slots_[s] = static_cast<std::uint32_t>(count_ + 1);
  return count_++;
}

void ElementTable::grow() {
  std::vector<std::uint32_t> fresh(std::max<std::size_t>(16, slots_.size() * 2), 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash({data_.data() + i * words_, words_}) & mask;
    while (fresh[s] != 0) s = (s + 1) & mask;
    fresh[s] = static_cast<std::uint32_t>(i + 1);
  }
  slots_ = std::move(fresh);
}

std::size_t ElementTable::index_of_rows(std::span<const Word> rows) const {
  Word key[(kMaxTableDim * kMaxTableDim) / gf2::kWordBits];
  pack(rows, {key, words_});
  const auto idx = lookup({key, words_});
  if (!idx) throw DomainError("element is not in the enumerated group");
  return *idx;
}

ElementTable ElementTable::enumerate(const MatrixGroup& g, std::uint64_t cap) {
  const std::size_t d = g.dim();
  if (d == 0 || d > kMaxTableDim) throw ResourceError("element tables are limited to dimension 16");
  if (cap >= std::uint64_t{1} << 32) cap = (std::uint64_t{1} << 32) - 2;
  ElementTable t;
  t.dim_ = d;
  t.words_ = gf2::words_for(d * d);
  t.grow();

  std::vector<std::vector<Word>> gen_rows;
  for (const auto& m : g.generators()) {
    std::vector<Word> rows(d);
    for (std::size_t r = 0; r < d; ++r) rows[r] = m.row_word(r);
    gen_rows.push_back(std::move(rows));
  }

  std::vector<Word> rows(d), image(d), key(t.words_);
  for (std::size_t r = 0; r < d; ++r) rows[r] = Word{1} << r;
  t.pack(rows, key);
  t.insert(key);
  for (std::size_t i = 0; i < t.count_; ++i) {
    t.unpack(i, rows);
    for (const auto& s : gen_rows) {
      for (std::size_t r = 0; r < d; ++r) image[r] = row_times(s, rows[r]);
      t.pack(image, key);
      if (t.lookup(key)) continue;
      if (t.count_ >= cap) {
        throw ResourceError("group order exceeds the enumeration cap " + std::to_string(cap));
      }
      t.insert(key);
    }
  }

  for (const auto& s : gen_rows) {
    const std::size_t idx = t.index_of_rows(s);
    t.generators_.push_back(idx);
    t.generator_inverses_.push_back(t.inverse(idx));
  }
  if (g.order() && *g.order() != static_cast<unsigned long>(t.count_)) {
    throw DomainError("declared order " + g.order()->get_str() + " differs from enumerated order " +
                      std::to_string(t.count_));
  }
  return t;
}

Matrix ElementTable::element(std::size_t i) const {
  Word rows[kMaxTableDim];
  unpack(i, {rows, dim_});
  Matrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r) m.row_words(r)[0] = rows[r];
  return m;
}

std::optional<std::size_t> ElementTable::find(const Matrix& m) const {
  if (!m.is_square() || m.dim() != dim_) return std::nullopt;
  Word rows[kMaxTableDim];
  for (std::size_t r = 0; r < dim_; ++r) rows[r] = m.row_word(r);
  Word key[(kMaxTableDim * kMaxTableDim) / gf2::kWordBits];
  pack({rows, dim_}, {key, words_});
  return lookup({key, words_});
}

void ElementTable::rows(std::size_t i, std::span<Word> out) const { unpack(i, out); }

std::size_t ElementTable::multiply(std::size_t a, std::size_t b) const {
  Word ra[kMaxTableDim], rb[kMaxTableDim];
  unpack(a, {ra, dim_});
  unpack(b, {rb, dim_});
  for (std::size_t r = 0; r < dim_; ++r) ra[r] = row_times({rb, dim_}, ra[r]);
  return index_of_rows({ra, dim_});
}

std::size_t ElementTable::inverse(std::size_t a) const {
  const auto idx = find(gf2::inverse(element(a)));
  if (!idx) throw DomainError("element table is not closed under inverses");
  return *idx;
}

std::size_t ElementTable::conjugate(std::size_t x, std::size_t by) const {
  return multiply(multiply(inverse(by), x), by);
}

std::uint64_t ElementTable::element_order(std::size_t i) const {
  std::uint64_t n = 1;
  for (std::size_t p = i; p != 0; p = multiply(p, i)) ++n;
  return i == 0 ? 1 : n;
}

std::size_t ElementTable::fixed_space_dim(std::size_t i) const { return gf2::fixed_space_dim(element(i)); }

std::size_t ElementTable::subgroup_order(std::span<const std::size_t> gens) const {
  std::vector<char> seen(count_, 0);
  std::vector<std::size_t> members{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const std::size_t s : gens) {
      const std::size_t p = multiply(members[k], s);
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
        if (members.size() == count_) return count_;
      }
    }
  }
  return members.size();
}

std::vector<std::size_t> ElementTable::conjugacy_class(std::size_t x) const {
  std::vector<std::size_t> cls{x};
  std::unordered_map<std::size_t, char> seen{{x, 1}};
  for (std::size_t k = 0; k < cls.size(); ++k) {
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      const std::size_t y = multiply(multiply(generator_inverses_[s], cls[k]), generators_[s]);
      if (seen.emplace(y, 1).second) cls.push_back(y);
    }
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

BigInt group_order(const MatrixGroup& g, std::uint64_t cap) {
  return static_cast<unsigned long>(ElementTable::enumerate(g, cap).size());
}

// ---------------------------------------------------------------------------
// Class data

std::size_t log2_ceil(const BigInt& n) {
  if (n <= 1) return 0;
  const BigInt m = n - 1;
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

namespace {

/// Element orders of the whole table, computed by walking cyclic subgroups.
std::vector<std::uint64_t> all_orders(const ElementTable& t) {
  std::vector<std::uint64_t> order(t.size(), 0);
  order[0] = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (order[i] == 0) order[i] = t.element_order(i);
  }
  return order;
}

}  // namespace

ClassData prime_order_class_data(const ElementTable& table) {
  const auto order = all_orders(table);
  std::vector<char> done(table.size(), 0);
  struct Raw {
    std::uint64_t order;
    std::size_t size;
    std::size_t first;
    std::size_t fix;
  };
  std::vector<Raw> raw;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (done[i] || !is_prime(order[i])) continue;
    const auto cls = table.conjugacy_class(i);
    for (const std::size_t y : cls) done[y] = 1;
    raw.push_back({order[i], cls.size(), i, table.fixed_space_dim(i)});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return std::tie(a.order, a.size, a.first) < std::tie(b.order, b.size, b.first);
  });

  ClassData data;
  data.dim = table.dim();
  data.order_exponent_bound = static_cast<unsigned long>(log2_ceil(static_cast<unsigned long>(table.size())));
  std::map<std::uint64_t, std::size_t> per_order;
  for (const auto& r : raw) {
    const std::size_t k = per_order[r.order]++;
    std::string label = std::to_string(r.order);
    // class letters A, B, ..., Z, AA, AB, ...
    std::string suffix;
    for (std::size_t n = k + 1; n > 0; n = (n - 1) / 26) suffix.insert(suffix.begin(), char('A' + (n - 1) % 26));
    data.records.push_back({label + suffix, r.order, BigInt(static_cast<unsigned long>(r.size)), r.fix});
  }
  return data;
}

ClassData prime_order_class_data(const MatrixGroup& g, std::uint64_t cap) {
  return prime_order_class_data(ElementTable::enumerate(g, cap));
}

// ---------------------------------------------------------------------------
// alpha and simplicity

bool is_simple(const ElementTable& table) {
  if (table.size() == 1) return false;
  std::vector<char> done(table.size(), 0);
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (done[i]) continue;
    const auto cls = table.conjugacy_class(i);
    for (const std::size_t y : cls) done[y] = 1;
    // the normal closure of x is generated by its class
    if (table.subgroup_order(cls) != table.size()) return false;
  }
  return true;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::size_t> alpha_bruteforce(const ElementTable& table, std::size_t x) {
  if (x >= table.size()) throw DomainError("element index out of range");
  if (!is_prime(table.element_order(x))) throw DomainError("alpha requires an element of prime order");
  if (!is_simple(table)) throw DomainError("alpha is offered for simple groups only");
  const auto cls = table.conjugacy_class(x);
  if (table.subgroup_order(cls) != table.size()) return std::nullopt;

  // By conjugation invariance, some minimal generating subset contains x.
  std::vector<std::size_t> others;
  for (const std::size_t y : cls) {
    if (y != x) others.push_back(y);
  }
  std::vector<std::size_t> gens;
  for (std::size_t k = 1; k <= cls.size(); ++k) {
    if (k == 1) {
      if (table.subgroup_order(std::span<const std::size_t>(&x, 1)) == table.size()) return 1;
      continue;
    }
    std::vector<std::size_t> comb(k - 1);
    for (std::size_t j = 0; j < k - 1; ++j) comb[j] = j;
    do {
      gens.assign(1, x);
      for (const std::size_t j : comb) gens.push_back(others[j]);
      if (table.subgroup_order(gens) == table.size()) return k;
    } while (next_combination(comb, others.size()));
  }
  return std::nullopt;
}

std::optional<std::size_t> alpha_bruteforce(const MatrixGroup& g, const Matrix& x, std::uint64_t cap) {
  const auto table = ElementTable::enumerate(g, cap);
  const auto idx = table.find(x);
  if (!idx) throw DomainError("alpha: x is not an element of the group");
  return alpha_bruteforce(table, *idx);
}

}  // namespace exprim::groups
