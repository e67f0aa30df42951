#include "minortrace/matrix.hpp"

#include <bit>
#include <string>

namespace minortrace {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, a.ring().spec() + " vs " + b.ring().spec());
}

void require_square(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "matrix is " + shape(a));
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  entries_.assign(rows * cols, ring_.zero());
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(entries_.size()) + " entries for a " +
                                              std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
  for (auto& e : entries_) e = ring_.canonical(e);
}

Matrix::Matrix(Trusted, Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {}

Matrix Matrix::from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Value> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (long long v : row) entries.push_back(ring.from_integer(v));
  }
  return Matrix(ring, r, c, std::move(entries));
}

Matrix Matrix::from_elems(const std::vector<std::vector<Elem>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  const Ring ring = rows.front().front().ring();
  std::size_t c = rows.front().size();
  std::vector<Value> entries;
  entries.reserve(rows.size() * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (const auto& e : row) {
      if (!(e.ring() == ring)) throw Error(ErrorCode::RingMismatch, e.ring().spec() + " vs " + ring.spec());
      entries.push_back(e.value());
    }
  }
  return Matrix(Trusted{}, ring, rows.size(), c, std::move(entries));
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = ring.one();
  return m;
}

Matrix Matrix::unit(const Ring& ring, std::size_t n, std::size_t l, std::size_t j) {
  if (l >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "unit matrix position outside " + std::to_string(n));
  Matrix m(ring, n, n);
  m.entries_[l * n + j] = ring.one();
  return m;
}

Elem Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) + ") in " + shape(*this));
  }
  return Elem(ring_, (*this)(i, j));
}

void Matrix::set(std::size_t i, std::size_t j, const Elem& e) {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) + ") in " + shape(*this));
  }
  if (!(e.ring() == ring_)) throw Error(ErrorCode::RingMismatch, e.ring().spec() + " vs " + ring_.spec());
  entries_[i * cols_ + j] = e.value();
}

Matrix Matrix::row(std::size_t i) const {
  if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i) + " in " + shape(*this));
  std::vector<Value> out(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return Matrix(Trusted{}, ring_, 1, cols_, std::move(out));
}

Matrix Matrix::col(std::size_t j) const {
  if (j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(j) + " in " + shape(*this));
  std::vector<Value> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return Matrix(Trusted{}, ring_, rows_, 1, std::move(out));
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!ring_.is_zero(e)) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, shape(a) + " * " + shape(b));
  const Ring& ring = a.ring();
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  std::vector<Value> out;
  out.reserve(n * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      Value acc = ring.mul(a(i, 0), b(0, j));
      for (std::size_t t = 1; t < m; ++t) acc = ring.add(acc, ring.mul(a(i, t), b(t, j)));
      out.push_back(std::move(acc));
    }
  }
  return Matrix(Matrix::Trusted{}, ring, n, p, std::move(out));
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, shape(a) + " + " + shape(b));
  std::vector<Value> out;
  out.reserve(a.entries_.size());
  for (std::size_t t = 0; t < a.entries_.size(); ++t) out.push_back(a.ring().add(a.entries_[t], b.entries_[t]));
  return Matrix(Matrix::Trusted{}, a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, shape(a) + " - " + shape(b));
  std::vector<Value> out;
  out.reserve(a.entries_.size());
  for (std::size_t t = 0; t < a.entries_.size(); ++t) out.push_back(a.ring().sub(a.entries_[t], b.entries_[t]));
  return Matrix(Matrix::Trusted{}, a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix scale(const Elem& s, const Matrix& a) {
  if (!(s.ring() == a.ring())) throw Error(ErrorCode::RingMismatch, s.ring().spec() + " vs " + a.ring().spec());
  std::vector<Value> out;
  out.reserve(a.entries_.size());
  for (const auto& e : a.entries_) out.push_back(a.ring().mul(s.value(), e));
  return Matrix(Matrix::Trusted{}, a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix transpose(const Matrix& a) {
  std::vector<Value> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a(i, j));
  }
  return Matrix(a.ring(), a.cols(), a.rows(), std::move(out));
}

Elem trace(const Matrix& a) {
  require_square(a);
  const Ring& ring = a.ring();
  Value acc = a(0, 0);
  for (std::size_t i = 1; i < a.rows(); ++i) acc = ring.add(acc, a(i, i));
  return Elem(ring, acc);
}

Elem minor2(const Matrix& a, const MinorIndex& idx) {
  if (!(idx.i < idx.j && idx.j < a.rows() && idx.k < idx.l && idx.l < a.cols())) {
    throw Error(ErrorCode::IndexOutOfRange, "minor (" + std::to_string(idx.i) + "," + std::to_string(idx.j) + "," +
                                                std::to_string(idx.k) + "," + std::to_string(idx.l) + ") in " +
                                                shape(a));
  }
  const Ring& ring = a.ring();
  return Elem(ring, ring.sub(ring.mul(a(idx.i, idx.k), a(idx.j, idx.l)), ring.mul(a(idx.i, idx.l), a(idx.j, idx.k))));
}

Elem scalar_of(const Matrix& a) {
  if (a.rows() != 1 || a.cols() != 1) throw Error(ErrorCode::ShapeMismatch, "expected 1x1, got " + shape(a));
  return Elem(a.ring(), a(0, 0));
}

BlockSplit block_split(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  if (n < 2) throw Error(ErrorCode::TooSmall, "block split needs n >= 2");
  const std::size_t m = n - 1;
  std::vector<Value> corner, last_row, last_col;
  corner.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) corner.push_back(a(i, j));
    last_col.push_back(a(i, m));
    last_row.push_back(a(m, i));
  }
  const Ring& ring = a.ring();
  return BlockSplit{Matrix(ring, m, m, std::move(corner)), Matrix(ring, 1, m, std::move(last_row)),
                    Matrix(ring, m, 1, std::move(last_col)), Elem(ring, a(m, m))};
}

Matrix block_join(const BlockSplit& s) {
  const std::size_t m = s.corner.rows();
  if (!s.corner.is_square() || s.last_row.rows() != 1 || s.last_row.cols() != m || s.last_col.rows() != m ||
      s.last_col.cols() != 1) {
    throw Error(ErrorCode::ShapeMismatch, "inconsistent block shapes");
  }
  const Ring& ring = s.corner.ring();
  if (!(s.last_row.ring() == ring && s.last_col.ring() == ring && s.pivot.ring() == ring)) {
    throw Error(ErrorCode::RingMismatch, "blocks over different rings");
  }
  const std::size_t n = m + 1;
  std::vector<Value> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < m && j < m) out.push_back(s.corner(i, j));
      else if (i < m) out.push_back(s.last_col(i, 0));
      else if (j < m) out.push_back(s.last_row(0, j));
      else out.push_back(s.pivot.value());
    }
  }
  return Matrix(ring, n, n, std::move(out));
}

Elem det_small(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  if (n > kMaxDetOrder) throw Error(ErrorCode::TooLarge, "det_small supports n <= 8, got " + std::to_string(n));
  const Ring& ring = a.ring();
  // minors[mask]: determinant of the bottom popcount(mask) rows restricted to
  // the columns in mask, expanded along its first row.
  std::vector<Value> minors(std::size_t{1} << n);
  minors[0] = ring.one();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    Value acc = ring.zero();
    int below = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      Value term = ring.mul(a(row, c), minors[mask & ~(1u << c)]);
      acc = (below % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
      ++below;
    }
    minors[mask] = std::move(acc);
  }
  return Elem(ring, minors[(1u << n) - 1]);
}

Matrix cayley_hamilton_2x2(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::ShapeMismatch, "expected 2x2, got " + shape(a));
  Matrix square = mat_mul(a, a);
  Matrix t_a = scale(trace(a), a);
  Matrix d_i = scale(det_small(a), Matrix::identity(a.ring(), 2));
  return mat_add(mat_sub(square, t_a), d_i);
}

}  // namespace minortrace
