#pragma once

/**
 * @file kernels.hpp
 * @brief ABA, powers and trace corollaries for matrices with vanishing
 *        2x2 minors, next to the cubic reference computations.
 *
 * When every 2x2 minor of A vanishes, ABA == Tr(AB) A for any B, and
 * Tr(AB) needs only the n^2 products a[i][j] * b[j][i]. The fast kernels
 * rely on that; whether the precondition is verified first is the
 * caller's choice (PreconditionCheck), since the minor scan is O(n^4).
 */

#include <cstdint>

#include "minortrace/structure.hpp"

namespace minortrace {

enum class PreconditionCheck { Enforce, Trust };

/// Raised by the fast kernels when Enforce finds a nonzero minor.
class StructureError : public Error {
 public:
  explicit StructureError(MinorWitness witness);
  const MinorWitness& witness() const noexcept { return witness_; }

 private:
  MinorWitness witness_;
};

/// (A B) A with two full products.
Matrix naive_aba(const Matrix& a, const Matrix& b);

/// Tr(AB) as sum_{i,j} a[i][j] * b[j][i]; AB is never formed.
Elem trace_of_product(const Matrix& a, const Matrix& b);

/// Tr(AB) * A.
Matrix structured_aba(const Matrix& a, const Matrix& b, PreconditionCheck check = PreconditionCheck::Enforce);

/// A^k as Tr(A)^(k-1) * A, k >= 1.
Matrix structured_power(const Matrix& a, std::uint64_t k, PreconditionCheck check = PreconditionCheck::Enforce);

/// k-fold product A * A * ... * A.
Matrix naive_power(const Matrix& a, std::uint64_t k);

/// r * B * c as a scalar.
Elem trace_product_via_outer(const OuterFactors& f, const Matrix& b);

struct CorollaryResiduals {
  Matrix ab_squared;    // (AB)^2 - Tr(AB) AB
  Elem trace_aba;       // Tr(ABA) - Tr(AB) Tr(A)
  Elem trace_a_squared; // Tr(A^2) - Tr(A)^2

  bool all_zero() const { return ab_squared.is_zero() && trace_aba.is_zero() && trace_a_squared.is_zero(); }
};

CorollaryResiduals check_corollaries(const Matrix& a, const Matrix& b,
                                     PreconditionCheck check = PreconditionCheck::Enforce);

}  // namespace minortrace
