#include "minortrace/structure.hpp"

namespace minortrace {

namespace {

template <typename Visit>
void for_each_minor(const Matrix& a, Visit&& visit) {
  const Ring& ring = a.ring();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        for (std::size_t l = k + 1; l < a.cols(); ++l) {
          Value m = ring.sub(ring.mul(a(i, k), a(j, l)), ring.mul(a(i, l), a(j, k)));
          if (ring.is_zero(m)) continue;
          if (!visit(MinorWitness{MinorIndex{i, j, k, l}, Elem(ring, m)})) return;
        }
      }
    }
  }
}

}  // namespace

StructureVerdict check_vanishing_minors(const Matrix& a) {
  StructureVerdict verdict;
  for_each_minor(a, [&](MinorWitness w) {
    verdict.structured = false;
    verdict.witness = std::move(w);
    return false;
  });
  return verdict;
}

std::vector<MinorWitness> nonzero_minors(const Matrix& a) {
  std::vector<MinorWitness> out;
  for_each_minor(a, [&](MinorWitness w) {
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

Matrix outer(const Matrix& c, const Matrix& r) {
  if (c.cols() != 1 || r.rows() != 1) {
    throw Error(ErrorCode::ShapeMismatch, "outer product needs a column and a row");
  }
  return mat_mul(c, r);
}

Matrix outer(const OuterFactors& f) { return outer(f.col, f.row); }

std::optional<OuterFactors> decompose_rank1_field(const Matrix& a) {
  const Ring& ring = a.ring();
  if (ring.kind() != RingKind::PrimeField) {
    throw Error(ErrorCode::UnsupportedRing, "rank-one decomposition needs a prime field, got " + ring.spec());
  }
  if (!check_vanishing_minors(a).structured) return std::nullopt;

  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t p = 0; p < a.rows(); ++p) {
      if (ring.is_zero(a(p, c))) continue;
      const Elem pivot(ring, a(p, c));
      std::vector<Value> row;
      row.reserve(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(elem_divexact(Elem(ring, a(p, j)), pivot).value());
      return OuterFactors{a.col(c), Matrix(ring, 1, a.cols(), std::move(row))};
    }
  }
  return OuterFactors{Matrix(ring, a.rows(), 1), Matrix(ring, 1, a.cols())};
}

std::optional<OuterFactors> decompose_2x2_gcd(const Matrix& a) {
  const Ring& ring = a.ring();
  if (ring.kind() != RingKind::Integers) {
    throw Error(ErrorCode::UnsupportedRing, "gcd decomposition needs the integers, got " + ring.spec());
  }
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::ShapeMismatch, "gcd decomposition is 2x2 only");
  if (!det_small(a).is_zero()) throw Error(ErrorCode::PreconditionViolated, "determinant is nonzero");

  std::size_t p = 0;
  while (p < 2 && ring.is_zero(a(p, 0)) && ring.is_zero(a(p, 1))) ++p;
  if (p == 2) return OuterFactors{Matrix(ring, 2, 1), Matrix(ring, 1, 2)};

  const Elem g = elem_gcd(a.at(p, 0), a.at(p, 1));
  const Elem u = elem_divexact(a.at(p, 0), g);
  const Elem v = elem_divexact(a.at(p, 1), g);
  // (u, v) is primitive, so det == 0 forces the other row to be a multiple of it.
  const std::size_t other = 1 - p;
  const std::size_t q = u.is_zero() ? 1 : 0;
  const Elem multiplier = elem_divexact(a.at(other, q), q == 0 ? u : v);

  Matrix col(ring, 2, 1);
  col.set(p, 0, g);
  col.set(other, 0, multiplier);
  return OuterFactors{std::move(col), Matrix::from_elems({{u, v}})};
}

Value random_value(const Ring& ring, std::mt19937_64& rng, int bound) {
  switch (ring.kind()) {
    case RingKind::Integers: {
      std::uniform_int_distribution<long long> dist(-bound, bound);
      return ring.from_integer(dist(rng));
    }
    case RingKind::Modular:
    case RingKind::PrimeField: {
      const Integer& m = ring.modulus();
      if (m.fits_ulong_p()) {
        std::uniform_int_distribution<unsigned long> dist(0, m.get_ui() - 1);
        return ring.from_integer(Integer(dist(rng)));
      }
      Integer acc = 0;
      for (std::size_t bits = 0; bits < mpz_sizeinbase(m.get_mpz_t(), 2) + 64; bits += 64) {
        acc = (acc << 64) + Integer(static_cast<unsigned long>(rng()));
      }
      return ring.from_integer(acc);
    }
    case RingKind::PolyOver: {
      std::uniform_int_distribution<int> degree(0, 2);
      const Ring base = ring.base();
      Coeffs c(static_cast<std::size_t>(degree(rng)) + 1);
      for (auto& v : c) v = random_value(base, rng, bound);
      return ring.canonical(Value(std::move(c)));
    }
  }
  return ring.zero();
}

Matrix random_matrix(std::mt19937_64& rng, const Ring& ring, std::size_t rows, std::size_t cols, int bound) {
  std::vector<Value> entries;
  entries.reserve(rows * cols);
  for (std::size_t t = 0; t < rows * cols; ++t) entries.push_back(random_value(ring, rng, bound));
  return Matrix(ring, rows, cols, std::move(entries));
}

Matrix gen_random(std::uint64_t seed, const Ring& ring, std::size_t rows, std::size_t cols, int bound) {
  std::mt19937_64 rng(seed);
  return random_matrix(rng, ring, rows, cols, bound);
}

std::optional<Value> nilpotent_scalar(const Ring& ring) {
  if (ring.kind() != RingKind::Modular) {
    throw Error(ErrorCode::UnsupportedRing, "nilpotent scalar scan needs a modular ring, got " + ring.spec());
  }
  const Integer& m = ring.modulus();
  if (!m.fits_ulong_p()) throw Error(ErrorCode::TooLargeToEnumerate, "modulus above 64 bits");
  // s^2 == 0 mod m iff p^ceil(e/2) | s for every p^e || m, so the least
  // such residue is the product of those prime powers.
  unsigned long rest = m.get_ui();
  unsigned long least = 1;
  for (unsigned long d = 2; static_cast<unsigned __int128>(d) * d * d <= rest; ++d) {
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    for (int t = 0; t < (e + 1) / 2; ++t) least *= d;
  }
  // Every prime factor left exceeds the cube root, so rest is 1, q, q^2 or q*r.
  if (rest > 1) {
    unsigned long q = Integer(sqrt(Integer(rest))).get_ui();
    least *= (q * q == rest) ? q : rest;
  }
  if (least == m.get_ui()) return std::nullopt;
  return ring.from_integer(Integer(least));
}

Matrix gen_structured(std::mt19937_64& rng, const Ring& ring, std::size_t n, GenMode mode, int bound) {
  if (mode == GenMode::Outer) {
    Matrix c = random_matrix(rng, ring, n, 1, bound);
    Matrix r = random_matrix(rng, ring, 1, n, bound);
    return outer(c, r);
  }
  auto s = nilpotent_scalar(ring);
  if (!s) throw Error(ErrorCode::NoNilpotentScalar, ring.spec() + " has no nonzero s with s^2 == 0");
  return scale(Elem(ring, *s), random_matrix(rng, ring, n, n, bound));
}

Matrix gen_structured(std::uint64_t seed, const Ring& ring, std::size_t n, GenMode mode, int bound) {
  std::mt19937_64 rng(seed);
  return gen_structured(rng, ring, n, mode, bound);
}

}  // namespace minortrace
