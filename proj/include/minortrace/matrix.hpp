#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over a single runtime ring.
 *
 * Indices are 0-based throughout the library. Only the CLI and the JSON
 * reports shift to 1-based numbering.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "minortrace/ring.hpp"

namespace minortrace {

class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Row-major entries; each is reduced to canonical form.
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static Matrix from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_elems(const std::vector<std::vector<Elem>>& rows);
  static Matrix identity(const Ring& ring, std::size_t n);
  /// E_lj: a single one at (l, j) in an n x n zero matrix.
  static Matrix unit(const Ring& ring, std::size_t n, std::size_t l, std::size_t j);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Unchecked raw access.
  const Value& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  /// Bounds-checked element access.
  Elem at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Elem& e);

  std::span<const Value> entries() const noexcept { return entries_; }
  Matrix row(std::size_t i) const;
  Matrix col(std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  // Entries assumed canonical.
  struct Trusted {};
  Matrix(Trusted, Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  friend Matrix mat_mul(const Matrix&, const Matrix&);
  friend Matrix mat_add(const Matrix&, const Matrix&);
  friend Matrix mat_sub(const Matrix&, const Matrix&);
  friend Matrix scale(const Elem&, const Matrix&);

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

struct MinorIndex {
  std::size_t i = 0;  // rows i < j
  std::size_t j = 1;
  std::size_t k = 0;  // cols k < l
  std::size_t l = 1;

  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;
};

/// The partition [[corner, last_col], [last_row, pivot]] of a square matrix.
struct BlockSplit {
  Matrix corner;    // (n-1) x (n-1)
  Matrix last_row;  // 1 x (n-1)
  Matrix last_col;  // (n-1) x 1
  Elem pivot;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scale(const Elem& s, const Matrix& a);
Matrix transpose(const Matrix& a);

Elem trace(const Matrix& a);
/// a[i][k] * a[j][l] - a[i][l] * a[j][k].
Elem minor2(const Matrix& a, const MinorIndex& idx);
/// Value of a 1x1 matrix.
Elem scalar_of(const Matrix& a);

BlockSplit block_split(const Matrix& a);
Matrix block_join(const BlockSplit& s);

/// Largest order accepted by det_small.
inline constexpr std::size_t kMaxDetOrder = 8;

/// Division-free Laplace expansion, memoised over column subsets.
Elem det_small(const Matrix& a);

/// A^2 - Tr(A) A + det(A) I for a 2x2 matrix; always zero.
Matrix cayley_hamilton_2x2(const Matrix& a);

}  // namespace minortrace
