#pragma once

// Bit-packed linear algebra over the field with two elements.
//
// Convention: vectors are row vectors and a matrix M acts by v -> v*M, so row i
// of M is the image of the i-th standard basis vector. Bit i of a vector is
// coordinate i; packed words hold coordinates 64*w .. 64*w+63, least
// significant bit first. Bits beyond the dimension are always zero.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exprim::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim);

  static Vector unit(std::size_t dim, std::size_t i);
  static Vector all_ones(std::size_t dim);
  /// Vector whose coordinates are the low `dim` bits of `bits` (dim <= 64).
  static Vector from_word(std::size_t dim, Word bits);
  /// Parses a string of '0'/'1' characters; character i is coordinate i.
  static Vector parse(std::string_view bits);

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const;
  std::size_t weight() const;
  /// Index of the lowest nonzero coordinate, or dim() when zero.
  std::size_t leading() const;
  /// Coordinates packed into a single word (requires dim <= 64).
  Word to_word() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  Vector& operator^=(const Vector& other);
  friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }
  /// Standard dot product.
  bool dot(const Vector& other) const;

  std::string to_string() const;

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Word> words_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::size_t dim) : Matrix(dim, dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix from_rows(std::span<const Vector> rows);
  /// Permutation matrix of e_i -> e_{images[i]} (0-based images).
  static Matrix permutation(std::span<const std::size_t> images);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  std::size_t dim() const { return rows_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);
  /// Row r of a matrix with at most 64 columns as a single word.
  Word row_word(std::size_t r) const { return data_[r * stride_]; }

  /// v * M.
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  /// Matrix product in the row-vector convention: v*(A*B) = (v*A)*B.
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

std::size_t rank(const Matrix& m);

/// Dimension of the 1-eigenspace C_V(x) = ker(x + I).
std::size_t fixed_space_dim(const Matrix& x);

/// Basis of the left kernel {v : v*M = 0}, in reduced echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Kronecker product; basis vector (i, j) of the product has index i*dim(b)+j.
Matrix tensor(const Matrix& a, const Matrix& b);

/// x^n by repeated squaring.
Matrix power(const Matrix& x, std::uint64_t n);

/// Multiplicative order of an invertible matrix, or 0 if it exceeds `limit`.
std::uint64_t element_order(const Matrix& x, std::uint64_t limit);

/// A subspace held as a reduced row echelon basis. The pivot of a basis vector
/// is its lowest set coordinate; no other basis vector has that coordinate set.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::span<const Vector> vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v modulo the subspace (zero at every pivot column).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  /// Adds v; returns false if v was already inside.
  bool insert(const Vector& v);
  /// Coordinates of v (which must lie in the subspace) w.r.t. basis().
  Vector coordinates(const Vector& v) const;
  /// Matrix whose rows are the basis vectors.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Precomputed byte tables for v -> v*M on word-packed vectors, for matrices
/// with at most 64 rows and columns. This is the inner loop of orbit and
/// element enumeration.
class ActionTable {
 public:
  ActionTable() = default;
  explicit ActionTable(const Matrix& m);

  Word apply(Word v) const {
    Word out = 0;
    for (std::size_t k = 0; k < chunks_; ++k, v >>= 8) out ^= table_[k * 256 + (v & 0xFFU)];
    return out;
  }

 private:
  std::size_t chunks_ = 0;
  std::vector<Word> table_;
};

/// Jordan type of a unipotent element: block sizes, sorted in decreasing order.
struct JordanType {
  std::vector<std::size_t> blocks;

  static JordanType from_counts(std::size_t twos, std::size_t ones);
  /// Parses the comma list "2,1,1".
  static JordanType parse(std::string_view list);

  std::size_t dim() const;
  std::size_t count(std::size_t block_size) const;
  /// Renders as "(J_2^6, J_1^4)".
  std::string to_string() const;

  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Jordan type (J_2^r, J_1^{d-2r}) with r = rank(x + I). Throws DomainError
/// unless x is an involution.
JordanType involution_jordan_type(const Matrix& x);

/// Block-diagonal matrix with one standard unipotent block per entry of t.
/// Only block sizes 1 and 2 are supported.
Matrix realize_involution_type(const JordanType& t);

/// Jordan type of the tensor product of explicit realizations of the factors.
JordanType tensor_jordan_involutions(std::span<const JordanType> factors);

}  // namespace exprim::gf2
