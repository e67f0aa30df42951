#pragma once

/**
 * @file structure.hpp
 * @brief Matrices whose 2x2 minors all vanish: detection, construction,
 *        column-row decomposition and seeded generators.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "minortrace/matrix.hpp"

namespace minortrace {

/// A = col * row.
struct OuterFactors {
  Matrix col;  // n x 1
  Matrix row;  // 1 x m
};

struct MinorWitness {
  MinorIndex index;
  Elem value;  // nonzero
};

struct StructureVerdict {
  bool structured = true;
  std::optional<MinorWitness> witness;  // present iff !structured
};

/// Scans minors in lexicographic (i, j, k, l) order and stops at the first
/// nonzero one. Rectangular input is accepted.
StructureVerdict check_vanishing_minors(const Matrix& a);

/// Every nonzero minor, lexicographic order.
std::vector<MinorWitness> nonzero_minors(const Matrix& a);

Matrix outer(const Matrix& c, const Matrix& r);
Matrix outer(const OuterFactors& f);

/// Rank-one factorization over a prime field; nullopt when some minor is
/// nonzero. The zero matrix yields zero factors.
std::optional<OuterFactors> decompose_rank1_field(const Matrix& a);

/// Column-row factorization of a singular 2x2 integer matrix via gcds.
/// Throws PreconditionViolated when det(a) != 0.
std::optional<OuterFactors> decompose_2x2_gcd(const Matrix& a);

enum class GenMode { Outer, NilScalar };

/// Entry bound used for Integers (and polynomial coefficients) by default.
inline constexpr int kDefaultEntryBound = 9;

/// Uniform element: residues for finite rings, [-bound, bound] for the
/// Integers, degree <= 2 polynomials over the base otherwise.
Value random_value(const Ring& ring, std::mt19937_64& rng, int bound = kDefaultEntryBound);

/// Matrix with independent random_value entries.
Matrix gen_random(std::uint64_t seed, const Ring& ring, std::size_t rows, std::size_t cols,
                  int bound = kDefaultEntryBound);
Matrix random_matrix(std::mt19937_64& rng, const Ring& ring, std::size_t rows, std::size_t cols,
                     int bound = kDefaultEntryBound);

/// First nonzero residue s with s^2 == 0 in a Modular ring, if any.
std::optional<Value> nilpotent_scalar(const Ring& ring);

/// n x n matrix with vanishing minors, deterministic in the seed. Outer
/// returns c * r; NilScalar returns s * M with s^2 == 0.
Matrix gen_structured(std::uint64_t seed, const Ring& ring, std::size_t n, GenMode mode,
                      int bound = kDefaultEntryBound);
Matrix gen_structured(std::mt19937_64& rng, const Ring& ring, std::size_t n, GenMode mode,
                      int bound = kDefaultEntryBound);

}  // namespace minortrace
