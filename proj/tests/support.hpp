#pragma once

// Test-only oracles. Everything here is written against the Elem-level API
// with plain loops so it does not share code paths with the kernels it checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "minortrace/io.hpp"

namespace mt_test {

using namespace minortrace;

inline std::vector<Ring> sample_rings() {
  return {
      Ring::integers(),
      Ring::modular(4),
      Ring::modular(97),
      Ring::prime_field(5),
      Ring::poly_over(Ring::integers()),
      Ring::poly_over(Ring::modular(4)),
      Ring::modular(Integer("18446744073709551629")),  // above 2^64: Integer residues
  };
}

inline Elem entry(const Matrix& m, std::size_t i, std::size_t j) { return m.at(i, j); }

/// Leibniz sum over all permutations.
inline Elem leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem total(a.ring(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) inversions += perm[x] > perm[y] ? 1 : 0;
    }
    Elem term(a.ring(), 1);
    for (std::size_t i = 0; i < n; ++i) term = term * entry(a, i, perm[i]);
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// All 2x2 minors vanish, by direct enumeration over row and column pairs.
inline bool all_minors_vanish(const Matrix& a) {
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1) {
    for (std::size_t r2 = 0; r2 < a.rows(); ++r2) {
      for (std::size_t c1 = 0; c1 < a.cols(); ++c1) {
        for (std::size_t c2 = 0; c2 < a.cols(); ++c2) {
          if (r1 == r2 || c1 == c2) continue;
          Elem d = entry(a, r1, c1) * entry(a, r2, c2) - entry(a, r1, c2) * entry(a, r2, c1);
          if (!d.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

/// (ABA)[i][k] = sum_{j,l} a[i][j] b[j][l] a[l][k].
inline Matrix triple_sum_aba(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  Matrix out(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Elem acc(a.ring(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) acc = acc + entry(a, i, j) * entry(b, j, l) * entry(a, l, k);
      }
      out.set(i, k, acc);
    }
  }
  return out;
}

inline Elem diag_sum_of_product(const Matrix& a, const Matrix& b) {
  Elem acc(a.ring(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) acc = acc + entry(a, i, t) * entry(b, t, i);
  }
  return acc;
}

inline Matrix scalar_times(const Elem& s, const Matrix& a) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, s * entry(a, i, j));
  }
  return out;
}

/// Every n x n matrix over Z/m, as a list.
inline std::vector<Matrix> all_matrices(const Ring& ring, std::size_t n) {
  const long long m = ring.modulus().get_si();
  long long total = 1;
  for (std::size_t t = 0; t < n * n; ++t) total *= m;
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long long idx = 0; idx < total; ++idx) {
    Matrix a(ring, n, n);
    long long rest = idx;
    for (std::size_t t = 0; t < n * n; ++t) {
      a.set(t / n, t % n, Elem(ring, rest % m));
      rest /= m;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace mt_test
