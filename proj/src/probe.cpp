#include "minortrace/probe.hpp"

#include "minortrace/kernels.hpp"

namespace minortrace {

ProbeReport probe_converse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "probe needs a square matrix");
  if (a.rows() < 2) throw Error(ErrorCode::TooSmall, "probe needs n >= 2");

  auto verdict = check_vanishing_minors(a);
  if (verdict.structured) return ProbeReport{};

  const Ring& ring = a.ring();
  const MinorIndex m = verdict.witness->index;
  // C = A E_lj A = col_l(A) row_j(A), D = a[j][l] A; compare at (i, k).
  ProbeWitness w{
      m,
      verdict.witness->value,
      m.l,
      m.j,
      m.i,
      m.k,
      Elem(ring, ring.mul(a(m.i, m.l), a(m.j, m.k))),
      Elem(ring, ring.mul(a(m.j, m.l), a(m.i, m.k))),
  };
  return ProbeReport{false, std::move(w)};
}

bool probe_witness_confirmed(const Matrix& a, const ProbeWitness& w) {
  const Matrix e = Matrix::unit(a.ring(), a.rows(), w.probe_l, w.probe_j);
  const Matrix lhs = naive_aba(a, e);
  const Matrix rhs = scale(trace(mat_mul(a, e)), a);
  return lhs != rhs && lhs.at(w.entry_i, w.entry_k) == w.lhs && rhs.at(w.entry_i, w.entry_k) == w.rhs &&
         w.lhs != w.rhs;
}

namespace {

void require_pair(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, a.ring().spec() + " vs " + b.ring().spec());
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "expected two n x n matrices");
  }
  if (a.rows() < 2) throw Error(ErrorCode::TooSmall, "block split needs n >= 2");
}

}  // namespace

InductionResiduals induction_equalities(const Matrix& a, const Matrix& b) {
  require_pair(a, b);
  const BlockSplit sa = block_split(a);
  const BlockSplit sb = block_split(b);
  const Matrix& a_corner = sa.corner;
  const Matrix& a1 = sa.last_row;
  const Matrix& a2 = sa.last_col;
  const Elem& ann = sa.pivot;
  const Matrix& b_corner = sb.corner;
  const Matrix& b1 = sb.last_row;
  const Matrix& b2 = sb.last_col;
  const Elem& bnn = sb.pivot;

  const Matrix ab_corner = mat_mul(a_corner, b_corner);
  const Elem tr_corner = trace(ab_corner);
  const Elem b1a2 = scalar_of(mat_mul(b1, a2));
  const Elem a1b2 = scalar_of(mat_mul(a1, b2));
  const Matrix a2b1 = mat_mul(a2, b1);

  // (i)
  const Matrix r1_lhs =
      mat_add(mat_mul(a2b1, a_corner), mat_mul(mat_add(mat_mul(a_corner, b2), scale(bnn, a2)), a1));
  const Matrix r1 = mat_sub(r1_lhs, scale(b1a2 + a1b2 + ann * bnn, a_corner));

  // (ii); the scalar on the right is Tr(AB) less the a_nn b_nn term that
  // was cancelled from both sides.
  const Matrix r2_lhs = mat_add(mat_mul(mat_add(ab_corner, a2b1), a2), scale(ann, mat_mul(a_corner, b2)));
  const Matrix r2 = mat_sub(r2_lhs, scale(tr_corner + b1a2 + a1b2, a2));

  // (iii)
  const Matrix r3_lhs = mat_mul(mat_add(mat_mul(a1, b_corner), scale(ann, b1)), a_corner);
  const Matrix r3 = mat_sub(r3_lhs, scale(tr_corner + b1a2, a1));

  // (iv)
  const Elem r4 = scalar_of(mat_mul(mat_mul(a1, b_corner), a2)) - tr_corner * ann;

  return InductionResiduals{r1, r2, r3, r4};
}

Matrix block_product_aba(const Matrix& a, const Matrix& b) {
  require_pair(a, b);
  const BlockSplit sa = block_split(a);
  const BlockSplit sb = block_split(b);

  // Blocks of AB.
  const Matrix p11 = mat_add(mat_mul(sa.corner, sb.corner), mat_mul(sa.last_col, sb.last_row));
  const Matrix p12 = mat_add(mat_mul(sa.corner, sb.last_col), scale(sb.pivot, sa.last_col));
  const Matrix p21 = mat_add(mat_mul(sa.last_row, sb.corner), scale(sa.pivot, sb.last_row));
  const Elem p22 = scalar_of(mat_mul(sa.last_row, sb.last_col)) + sa.pivot * sb.pivot;

  BlockSplit out{
      mat_add(mat_mul(p11, sa.corner), mat_mul(p12, sa.last_row)),
      mat_add(mat_mul(p21, sa.corner), scale(p22, sa.last_row)),
      mat_add(mat_mul(p11, sa.last_col), scale(sa.pivot, p12)),
      scalar_of(mat_mul(p21, sa.last_col)) + p22 * sa.pivot,
  };
  return block_join(out);
}

}  // namespace minortrace
