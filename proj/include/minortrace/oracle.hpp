#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for "ABA == Tr(AB) A for every B iff all
 *        2x2 minors of A vanish" over small finite rings.
 */

#include <cstdint>
#include <vector>

#include "minortrace/matrix.hpp"

namespace minortrace {

/// naive ABA - Tr(AB) A.
Matrix verify_identity(const Matrix& a, const Matrix& b);

/// Decides "for all B: ABA == Tr(AB) A" using only the n^2 probes E_lj.
bool identity_holds_on_unit_probes(const Matrix& a);

/// Decides the same quantifier by enumerating every B over a finite ring.
bool identity_holds_for_all_b(const Matrix& a);

/// Guard for exhaustive enumeration: m^(n^2) must not exceed this.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;
/// Mismatch list cap in EquivalenceReport.
inline constexpr std::size_t kMaxMismatches = 10;

/// The index-th n x n matrix over a finite ring, entries as base-m digits
/// in row-major order (entry 0 least significant).
Matrix enumerate_matrix(const Ring& ring, std::size_t n, std::uint64_t index);

struct ExhaustiveOptions {
  /// Decide the B quantifier with E_lj probes instead of all of B.
  bool unit_probes = true;
  /// With unit_probes, also run the full-B decision on every k-th A
  /// (0 disables).
  std::uint64_t spot_check_every = 100;
  /// 0 means hardware concurrency.
  unsigned threads = 0;
};

struct EquivalenceReport {
  Ring ring;
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t set_identity = 0;  // size of {A : ABA == Tr(AB) A for all B}
  std::uint64_t set_minors = 0;    // size of {A : all 2x2 minors vanish}
  std::uint64_t spot_checks = 0;
  bool agree = true;
  /// Matrices in exactly one of the two sets (or whose probe decision
  /// disagreed with a full-B spot check), lowest enumeration index first.
  std::vector<Matrix> mismatches;
};

EquivalenceReport exhaustive_characterization(const Ring& ring, std::size_t n, const ExhaustiveOptions& options = {});

}  // namespace minortrace
