#pragma once

/**
 * @file probe.hpp
 * @brief Constructive falsifier for ABA == Tr(AB) A, and the residuals of
 *        the block-induction argument.
 *
 * For a minor with rows i < j and columns k < l, the probe B = E_lj gives
 * A E_lj A = col_l(A) * row_j(A) and Tr(A E_lj) A = a[j][l] A. At entry
 * (i, k) these are a[i][l] a[j][k] and a[j][l] a[i][k], whose difference
 * is minus the minor.
 */

#include <optional>

#include "minortrace/structure.hpp"

namespace minortrace {

struct ProbeWitness {
  MinorIndex minor;
  Elem minor_value;
  std::size_t probe_l;  // B = E_{probe_l, probe_j}
  std::size_t probe_j;
  std::size_t entry_i;  // differing entry of ABA vs Tr(AB) A
  std::size_t entry_k;
  Elem lhs;  // (A E_lj A)[i][k]
  Elem rhs;  // (Tr(A E_lj) A)[i][k]
};

struct ProbeReport {
  bool structured = true;
  std::optional<ProbeWitness> witness;
};

ProbeReport probe_converse(const Matrix& a);

/// Full-matrix recheck: naive A E_lj A against Tr(A E_lj) A.
bool probe_witness_confirmed(const Matrix& a, const ProbeWitness& w);

struct InductionResiduals {
  Matrix r1;  // (n-1) x (n-1)
  Matrix r2;  // (n-1) x 1
  Matrix r3;  // 1 x (n-1)
  Elem r4;

  bool all_zero() const { return r1.is_zero() && r2.is_zero() && r3.is_zero() && r4.is_zero(); }
};

/// Residuals of the four reduced block equalities. All vanish when every
/// 2x2 minor of A vanishes.
InductionResiduals induction_equalities(const Matrix& a, const Matrix& b);

/// ABA assembled from the block-product formula over the corner split.
/// Holds for every A and B; used to cross-check the block bookkeeping.
Matrix block_product_aba(const Matrix& a, const Matrix& b);

}  // namespace minortrace
