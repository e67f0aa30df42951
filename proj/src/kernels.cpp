#include "minortrace/kernels.hpp"

#include <string>

namespace minortrace {

namespace {

void require_square_pair(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, a.ring().spec() + " vs " + b.ring().spec());
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "expected two n x n matrices");
  }
}

void enforce_structure(const Matrix& a, PreconditionCheck check) {
  if (check == PreconditionCheck::Trust) return;
  auto verdict = check_vanishing_minors(a);
  if (!verdict.structured) throw StructureError(std::move(*verdict.witness));
}

std::string describe(const MinorWitness& w) {
  return "minor rows (" + std::to_string(w.index.i) + "," + std::to_string(w.index.j) + ") cols (" +
         std::to_string(w.index.k) + "," + std::to_string(w.index.l) + ") = " + w.value.str();
}

}  // namespace

StructureError::StructureError(MinorWitness witness)
    : Error(ErrorCode::StructurePreconditionFailed, describe(witness)), witness_(std::move(witness)) {}

Matrix naive_aba(const Matrix& a, const Matrix& b) {
  require_square_pair(a, b);
  return mat_mul(mat_mul(a, b), a);
}

Elem trace_of_product(const Matrix& a, const Matrix& b) {
  require_square_pair(a, b);
  const Ring& ring = a.ring();
  const std::size_t n = a.rows();
  Value acc = ring.zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) acc = ring.add(acc, ring.mul(a(i, j), b(j, i)));
  }
  return Elem(ring, acc);
}

Matrix structured_aba(const Matrix& a, const Matrix& b, PreconditionCheck check) {
  require_square_pair(a, b);
  enforce_structure(a, check);
  return scale(trace_of_product(a, b), a);
}

Matrix structured_power(const Matrix& a, std::uint64_t k, PreconditionCheck check) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "power of a non-square matrix");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "exponent must be >= 1");
  enforce_structure(a, check);
  return scale(elem_pow(trace(a), k - 1), a);
}

Matrix naive_power(const Matrix& a, std::uint64_t k) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "power of a non-square matrix");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "exponent must be >= 1");
  Matrix out = a;
  for (std::uint64_t t = 1; t < k; ++t) out = mat_mul(out, a);
  return out;
}

Elem trace_product_via_outer(const OuterFactors& f, const Matrix& b) {
  if (f.col.cols() != 1 || f.row.rows() != 1 || !b.is_square() || f.row.cols() != b.rows() ||
      b.cols() != f.col.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "factors and B are not conformable");
  }
  return scalar_of(mat_mul(mat_mul(f.row, b), f.col));
}

CorollaryResiduals check_corollaries(const Matrix& a, const Matrix& b, PreconditionCheck check) {
  require_square_pair(a, b);
  enforce_structure(a, check);
  const Matrix ab = mat_mul(a, b);
  const Elem t_ab = trace(ab);
  const Elem t_a = trace(a);
  return CorollaryResiduals{
      mat_sub(mat_mul(ab, ab), scale(t_ab, ab)),
      trace(mat_mul(ab, a)) - t_ab * t_a,
      trace(mat_mul(a, a)) - t_a * t_a,
  };
}

}  // namespace minortrace
