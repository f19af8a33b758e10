#include "exprim/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "exprim/error.hpp"

namespace exprim::gf2 {

namespace {

Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

void xor_words(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

bool any_words(std::span<const Word> w) {
  return std::any_of(w.begin(), w.end(), [](Word x) { return x != 0; });
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {}

Vector Vector::unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.set(i, true);
  return v;
}

Vector Vector::all_ones(std::size_t dim) {
  Vector v(dim);
  for (auto& w : v.words_) w = ~Word{0};
  if (!v.words_.empty()) v.words_.back() &= tail_mask(dim);
  return v;
}

Vector Vector::from_word(std::size_t dim, Word bits) {
  if (dim > kWordBits) throw DomainError("Vector::from_word needs dim <= 64");
  Vector v(dim);
  if (dim > 0) v.words_[0] = bits & tail_mask(dim);
  return v;
}

Vector Vector::parse(std::string_view bits) {
  Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

void Vector::set(std::size_t i, bool value) {
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

bool Vector::is_zero() const { return !any_words(words_); }

std::size_t Vector::weight() const {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::size_t Vector::leading() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return dim_;
}

Word Vector::to_word() const {
  if (dim_ > kWordBits) throw DomainError("Vector::to_word needs dim <= 64");
  return words_.empty() ? 0 : words_[0];
}

Vector& Vector::operator^=(const Vector& other) {
  if (other.dim_ != dim_) throw DomainError("vector dimension mismatch");
  xor_words(words_, other.words_);
  return *this;
}

bool Vector::dot(const Vector& other) const {
  if (other.dim_ != dim_) throw DomainError("vector dimension mismatch");
  int parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) parity ^= std::popcount(words_[i] & other.words_[i]) & 1;
  return parity != 0;
}

std::string Vector::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, true);
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) throw DomainError("Matrix::from_rows needs at least one row");
  Matrix m(rows.size(), rows.front().dim());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::permutation(std::span<const std::size_t> images) {
  Matrix m(images.size(), images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size()) throw DomainError("permutation image out of range");
    m.set(i, images[i], true);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * stride_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  if (value) {
    w |= bit;
  } else {
    w &= ~bit;
  }
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.dim() != cols_) throw DomainError("row dimension mismatch");
  std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != rows_) throw DomainError("vector/matrix dimension mismatch");
  Vector out(cols_);
  auto vw = v.words();
  for (std::size_t w = 0; w < vw.size(); ++w) {
    Word bits = vw[w];
    while (bits != 0) {
      const std::size_t r = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      xor_words(out.words(), row_words(r));
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = data_[r * stride_ + w];
      while (bits != 0) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        t.flip(c, r);
      }
    }
  }
  return t;
}

bool Matrix::is_zero() const { return !any_words(data_); }

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t w = 0; w < stride_; ++w) {
      const Word expect = (r / kWordBits == w) ? Word{1} << (r % kWordBits) : 0;
      if (data_[r * stride_ + w] != expect) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch");
  xor_words(data_, other.data_);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto dst = out.row_words(r);
    for (std::size_t w = 0; w < a.stride_; ++w) {
      Word bits = a.data_[r * a.stride_ + w];
      while (bits != 0) {
        const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        xor_words(dst, b.row_words(k));
      }
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

// ---------------------------------------------------------------- elimination

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    const std::size_t w = c / kWordBits;
    const Word bit = Word{1} << (c % kWordBits);
    std::size_t p = r;
    while (p < a.rows() && (a.row_words(p)[w] & bit) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) std::swap_ranges(a.row_words(p).begin(), a.row_words(p).end(), a.row_words(r).begin());
    auto pivot = a.row_words(r);
    for (std::size_t q = p + 1; q < a.rows(); ++q) {
      auto row = a.row_words(q);
      if (row[w] & bit) xor_words(row, pivot);
    }
    ++r;
  }
  return r;
}

std::size_t fixed_space_dim(const Matrix& x) {
  if (!x.is_square()) throw DomainError("fixed_space_dim needs a square matrix");
  return x.dim() - rank(x + Matrix::identity(x.dim()));
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  // Row-reduce [M | I]; rows whose M-part vanishes carry kernel vectors.
  const std::size_t n = m.rows();
  const std::size_t c = m.cols();
  Matrix aug(n, c + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < c; ++k) {
      if (m.get(r, k)) aug.set(r, k, true);
    }
    aug.set(r, c + r, true);
  }
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < n; ++col) {
    std::size_t p = rk;
    while (p < n && !aug.get(p, col)) ++p;
    if (p == n) continue;
    if (p != rk) std::swap_ranges(aug.row_words(p).begin(), aug.row_words(p).end(), aug.row_words(rk).begin());
    for (std::size_t q = rk + 1; q < n; ++q) {
      if (aug.get(q, col)) xor_words(aug.row_words(q), aug.row_words(rk));
    }
    ++rk;
  }
  Subspace ker(n);
  for (std::size_t r = rk; r < n; ++r) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (aug.get(r, c + k)) v.set(k, true);
    }
    ker.insert(v);
  }
  return ker.basis();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DomainError("inverse needs a square matrix");
  const std::size_t n = m.dim();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && !a.get(p, col)) ++p;
    if (p == n) throw DomainError("matrix is singular");
    if (p != col) {
      std::swap_ranges(a.row_words(p).begin(), a.row_words(p).end(), a.row_words(col).begin());
      std::swap_ranges(inv.row_words(p).begin(), inv.row_words(p).end(), inv.row_words(col).begin());
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (q != col && a.get(q, col)) {
        xor_words(a.row_words(q), a.row_words(col));
        xor_words(inv.row_words(q), inv.row_words(col));
      }
    }
  }
  // Row operations applied to M turned it into I, so they compose to M^{-1}.
  return inv;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.dim(); }

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      for (std::size_t j = 0; j < b.rows(); ++j) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.get(j, l)) out.set(i * b.rows() + j, k * b.cols() + l, true);
        }
      }
    }
  }
  return out;
}

Matrix power(const Matrix& x, std::uint64_t n) {
  Matrix result = Matrix::identity(x.dim());
  Matrix base = x;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::uint64_t element_order(const Matrix& x, std::uint64_t limit) {
  Matrix y = x;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (y.is_identity()) return k;
    y = y * x;
  }
  return 0;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  if (v.dim() != ambient_) throw DomainError("subspace ambient dimension mismatch");
  Vector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = r.leading();
  for (auto& b : basis_) {
    if (b.get(p)) b ^= r;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector coords(basis_.size());
  Vector residue = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (residue.get(pivots_[i])) {
      coords.set(i, true);
      residue ^= basis_[i];
    }
  }
  if (!residue.is_zero()) throw DomainError("vector does not lie in the subspace");
  return coords;
}

Matrix Subspace::basis_matrix() const {
  Matrix m(basis_.size(), ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) m.set_row(i, basis_[i]);
  return m;
}

// ---------------------------------------------------------------- ActionTable

ActionTable::ActionTable(const Matrix& m) {
  if (m.rows() > kWordBits || m.cols() > kWordBits) throw DomainError("ActionTable needs at most 64x64");
  chunks_ = (m.rows() + 7) / 8;
  table_.assign(chunks_ * 256, 0);
  for (std::size_t k = 0; k < chunks_; ++k) {
    for (std::size_t byte = 1; byte < 256; ++byte) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(byte));
      const std::size_t r = k * 8 + low;
      const Word row = r < m.rows() ? m.row_word(r) : 0;
      table_[k * 256 + byte] = table_[k * 256 + (byte & (byte - 1))] ^ row;
    }
  }
}

// ---------------------------------------------------------------- Jordan types

JordanType JordanType::from_counts(std::size_t twos, std::size_t ones) {
  JordanType t;
  t.blocks.assign(twos, 2);
  t.blocks.insert(t.blocks.end(), ones, 1);
  return t;
}

JordanType JordanType::parse(std::string_view list) {
  JordanType t;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view item = list.substr(pos, comma - pos);
    if (item.empty()) throw ParseError("empty Jordan block size");
    std::size_t value = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw ParseError("Jordan block sizes must be positive integers");
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (value == 0) throw ParseError("Jordan block sizes must be positive integers");
    t.blocks.push_back(value);
    pos = comma + 1;
  }
  std::sort(t.blocks.begin(), t.blocks.end(), std::greater<>());
  return t;
}

std::size_t JordanType::dim() const {
  std::size_t d = 0;
  for (auto b : blocks) d += b;
  return d;
}

std::size_t JordanType::count(std::size_t block_size) const {
  return static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), block_size));
}

std::string JordanType::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  std::size_t i = 0;
  while (i < blocks.size()) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    if (!first) out << ", ";
    first = false;
    out << "J_" << blocks[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  out << ')';
  return out.str();
}

JordanType involution_jordan_type(const Matrix& x) {
  if (!x.is_square()) throw DomainError("involution_jordan_type needs a square matrix");
  if (x.is_identity()) throw DomainError("identity is not an involution");
  if (!(x * x).is_identity()) throw DomainError("matrix is not an involution");
  const std::size_t r = rank(x + Matrix::identity(x.dim()));
  return JordanType::from_counts(r, x.dim() - 2 * r);
}

Matrix realize_involution_type(const JordanType& t) {
  Matrix m = Matrix::identity(t.dim());
  std::size_t pos = 0;
  for (auto b : t.blocks) {
    if (b > 2) throw DomainError("only Jordan blocks of size 1 and 2 are supported");
    if (b == 2) m.set(pos, pos + 1, true);
    pos += b;
  }
  return m;
}

JordanType tensor_jordan_involutions(std::span<const JordanType> factors) {
  if (factors.empty()) throw DomainError("tensor_jordan_involutions needs at least one factor");
  Matrix product = realize_involution_type(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) product = tensor(product, realize_involution_type(factors[i]));
  if (product.is_identity()) return JordanType::from_counts(0, product.dim());
  return involution_jordan_type(product);
}

}  // namespace exprim::gf2
