#include <doctest.h>

#include "minortrace/structure.hpp"
#include "support.hpp"

using namespace minortrace;

TEST_CASE("check_vanishing_minors examples") {
  const Ring z = Ring::integers();
  CHECK(check_vanishing_minors(Matrix::from_ints(z, {{3, 4}, {6, 8}})).structured);
  CHECK(check_vanishing_minors(Matrix(z, 3, 3)).structured);
  CHECK(check_vanishing_minors(Matrix::from_ints(z, {{5}})).structured);

  const Ring z4 = Ring::modular(4);
  // 2*2 - 0*0 == 0 in Z/4 although the matrix is not an obvious outer product.
  CHECK(check_vanishing_minors(Matrix::from_ints(z4, {{2, 0}, {0, 2}})).structured);

  const StructureVerdict v = check_vanishing_minors(Matrix::identity(z, 2));
  REQUIRE_FALSE(v.structured);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->index == MinorIndex{0, 1, 0, 1});
  CHECK(v.witness->value == Elem(z, 1));
}

TEST_CASE("the first witness is the lexicographically least nonzero minor") {
  const Ring z = Ring::integers();
  // Rows 0 and 1 are proportional; row 2 breaks it first at columns (0, 1).
  const Matrix a = Matrix::from_ints(z, {{1, 2, 3}, {2, 4, 6}, {0, 1, 0}});
  const StructureVerdict v = check_vanishing_minors(a);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->index == MinorIndex{0, 2, 0, 1});
  CHECK(v.witness->value == Elem(z, 1 * 1 - 2 * 0));
  const auto all = nonzero_minors(a);
  REQUIRE_FALSE(all.empty());
  CHECK(all.front().index == v.witness->index);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const MinorWitness& x, const MinorWitness& y) { return x.index < y.index; }));
  for (const auto& w : all) CHECK(minor2(a, w.index) == w.value);
}

TEST_CASE("minor scan agrees with the all-pairs oracle") {
  std::mt19937_64 rng(101);
  for (const Ring& ring : mt_test::sample_rings()) {
    CAPTURE(ring.spec());
    for (int t = 0; t < 300; ++t) {
      const std::size_t rows = 1 + rng() % 5;
      const std::size_t cols = 1 + rng() % 5;
      // Small entries over finite rings make structured cases common.
      const Matrix a = random_matrix(rng, ring, rows, cols, 1);
      REQUIRE(check_vanishing_minors(a).structured == mt_test::all_minors_vanish(a));
      REQUIRE(nonzero_minors(a).empty() == mt_test::all_minors_vanish(a));
    }
  }
}

TEST_CASE("exhaustive minor scan over Z/2 for n = 2 finds 10 structured matrices") {
  const Ring z2 = Ring::modular(2);
  int count = 0;
  for (const Matrix& a : mt_test::all_matrices(z2, 2)) count += check_vanishing_minors(a).structured ? 1 : 0;
  // 16 matrices minus the 6 invertible ones.
  CHECK(count == 10);
}

TEST_CASE("outer examples") {
  const Ring z = Ring::integers();
  const Matrix c = Matrix::from_ints(z, {{1}, {2}});
  const Matrix r = Matrix::from_ints(z, {{3, 4}});
  CHECK(outer(c, r) == Matrix::from_ints(z, {{3, 4}, {6, 8}}));
  // e_1 e_n^T is the unit matrix E_1n.
  const Matrix e1 = Matrix::from_ints(z, {{1}, {0}, {0}});
  const Matrix e3 = Matrix::from_ints(z, {{0, 0, 1}});
  CHECK(outer(e1, e3) == Matrix::unit(z, 3, 0, 2));
  CHECK(outer(OuterFactors{c, r}) == outer(c, r));
  try {
    outer(r, c);
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("outer products have vanishing minors") {
  for (const Ring& ring : mt_test::sample_rings()) {
    CAPTURE(ring.spec());
    std::mt19937_64 rng(103);
    for (int t = 0; t < 10000; ++t) {
      const std::size_t n = 1 + rng() % 8;
      const Matrix a = gen_structured(rng, ring, n, GenMode::Outer);
      REQUIRE(check_vanishing_minors(a).structured);
    }
    for (std::size_t n = 5; n <= 8; ++n) {
      REQUIRE(mt_test::all_minors_vanish(gen_structured(rng, ring, n, GenMode::Outer)));
    }
  }
}

TEST_CASE("decompose_rank1_field examples") {
  const Ring f5 = Ring::prime_field(5);
  const Matrix a = Matrix::from_ints(f5, {{0, 0}, {2, 4}});
  const auto f = decompose_rank1_field(a);
  REQUIRE(f.has_value());
  // Pivot column 0, pivot row 1: col is column 0, row is row 1 scaled by 1/2.
  CHECK(f->col == Matrix::from_ints(f5, {{0}, {2}}));
  CHECK(f->row == Matrix::from_ints(f5, {{1, 2}}));
  CHECK(outer(*f) == a);

  const auto zero = decompose_rank1_field(Matrix(f5, 3, 3));
  REQUIRE(zero.has_value());
  CHECK(zero->col.is_zero());
  CHECK(zero->row.is_zero());

  CHECK_FALSE(decompose_rank1_field(Matrix::identity(f5, 2)).has_value());
  CHECK_FALSE(decompose_rank1_field(Matrix::identity(Ring::prime_field(3), 2)).has_value());

  // [[3,4],[6,8]] reduced mod 5.
  const Matrix b = Matrix::from_ints(f5, {{3, 4}, {6, 8}});
  CHECK(b == Matrix::from_ints(f5, {{3, 4}, {1, 3}}));
  const auto g = decompose_rank1_field(b);
  REQUIRE(g.has_value());
  CHECK(outer(*g) == b);
  try {
    decompose_rank1_field(Matrix::identity(Ring::integers(), 2));
    FAIL("expected UnsupportedRing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRing);
  }
}

TEST_CASE("decompose_rank1_field succeeds exactly on structured inputs and round-trips") {
  std::mt19937_64 rng(107);
  for (const char* p : {"2", "5", "97"}) {
    const Ring f = Ring::prime_field(Integer(p));
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 1 + rng() % 6;
      const Matrix a = t % 2 == 0 ? gen_structured(rng, f, n, GenMode::Outer) : random_matrix(rng, f, n, n);
      const auto factors = decompose_rank1_field(a);
      REQUIRE(factors.has_value() == mt_test::all_minors_vanish(a));
      if (factors) REQUIRE(outer(*factors) == a);
    }
  }
}

TEST_CASE("decompose_2x2_gcd examples") {
  const Ring z = Ring::integers();
  auto f = decompose_2x2_gcd(Matrix::from_ints(z, {{6, 10}, {9, 15}}));
  REQUIRE(f.has_value());
  CHECK(f->col == Matrix::from_ints(z, {{2}, {3}}));
  CHECK(f->row == Matrix::from_ints(z, {{3, 5}}));

  f = decompose_2x2_gcd(Matrix::from_ints(z, {{0, 0}, {3, 5}}));
  REQUIRE(f.has_value());
  CHECK(f->col == Matrix::from_ints(z, {{0}, {1}}));
  CHECK(f->row == Matrix::from_ints(z, {{3, 5}}));

  f = decompose_2x2_gcd(Matrix(z, 2, 2));
  REQUIRE(f.has_value());
  CHECK(outer(*f).is_zero());

  f = decompose_2x2_gcd(Matrix::from_ints(z, {{-4, 6}, {2, -3}}));
  REQUIRE(f.has_value());
  CHECK(outer(*f) == Matrix::from_ints(z, {{-4, 6}, {2, -3}}));

  auto code_of = [](const Matrix& m) {
    try {
      decompose_2x2_gcd(m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of(Matrix::identity(z, 2)) == ErrorCode::PreconditionViolated);
  CHECK(code_of(Matrix(z, 3, 3)) == ErrorCode::ShapeMismatch);
  CHECK(code_of(Matrix(Ring::modular(4), 2, 2)) == ErrorCode::UnsupportedRing);
}

TEST_CASE("decompose_2x2_gcd round-trips on integer outer products") {
  std::mt19937_64 rng(109);
  const Ring z = Ring::integers();
  for (int t = 0; t < 2000; ++t) {
    const Matrix a = gen_structured(rng, z, 2, GenMode::Outer, 30);
    const auto f = decompose_2x2_gcd(a);
    REQUIRE(f.has_value());
    REQUIRE(outer(*f) == a);
  }
}

TEST_CASE("nilpotent_scalar agrees with a residue scan") {
  for (long m = 2; m <= 200; ++m) {
    CAPTURE(m);
    const Ring zm = Ring::modular(m);
    long least = 0;
    for (long s = 1; s < m; ++s) {
      if ((s * s) % m == 0) {
        least = s;
        break;
      }
    }
    const auto s = nilpotent_scalar(zm);
    if (least == 0) {
      REQUIRE_FALSE(s.has_value());
    } else {
      REQUIRE(s.has_value());
      REQUIRE(zm.to_integer(*s) == least);
    }
  }
  CHECK(Ring::modular(4).to_integer(*nilpotent_scalar(Ring::modular(4))) == 2);
  CHECK(Ring::modular(8).to_integer(*nilpotent_scalar(Ring::modular(8))) == 4);
  CHECK_FALSE(nilpotent_scalar(Ring::modular(6)).has_value());
}

TEST_CASE("gen_structured is deterministic and honours its mode") {
  const Ring z4 = Ring::modular(4);
  CHECK(gen_structured(7, z4, 5, GenMode::Outer) == gen_structured(7, z4, 5, GenMode::Outer));
  CHECK(gen_random(7, z4, 3, 4) == gen_random(7, z4, 3, 4));
  const Matrix nil = gen_structured(9, z4, 6, GenMode::NilScalar);
  CHECK(check_vanishing_minors(nil).structured);
  for (std::size_t t = 0; t < 36; ++t) CHECK(z4.to_integer(nil.entries()[t]) % 2 == 0);
  try {
    gen_structured(1, Ring::modular(6), 3, GenMode::NilScalar);
    FAIL("expected NoNilpotentScalar");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoNilpotentScalar);
  }
}

TEST_CASE("integer entries respect the bound") {
  std::mt19937_64 rng(113);
  const Ring z = Ring::integers();
  for (int t = 0; t < 1000; ++t) {
    const Integer v = z.to_integer(random_value(z, rng, 9));
    REQUIRE(v >= -9);
    REQUIRE(v <= 9);
  }
}
