#include <doctest.h>

#include "minortrace/io.hpp"
#include "support.hpp"

using namespace minortrace;
using io::Json;

TEST_CASE("ring encodings") {
  CHECK(io::dump(io::ring_to_json(Ring::integers())) == R"({"kind":"int"})");
  CHECK(io::dump(io::ring_to_json(Ring::modular(4))) == R"({"kind":"mod","modulus":"4"})");
  CHECK(io::dump(io::ring_to_json(Ring::prime_field(5))) == R"({"kind":"gf","p":"5"})");
  CHECK(io::dump(io::ring_to_json(Ring::poly_over(Ring::integers(), "t"))) ==
        R"({"base":{"kind":"int"},"kind":"poly","var":"t"})");
  for (const Ring& ring : mt_test::sample_rings()) {
    CHECK(io::ring_from_json(io::ring_to_json(ring)) == ring);
    CHECK(io::parse_ring_spec(ring.spec()) == ring);
  }
}

TEST_CASE("ring spec strings") {
  CHECK(io::parse_ring_spec("int") == Ring::integers());
  CHECK(io::parse_ring_spec("mod:97") == Ring::modular(97));
  CHECK(io::parse_ring_spec("gf:5") == Ring::prime_field(5));
  const Ring nested = io::parse_ring_spec("poly:poly:mod:4:x:y");
  CHECK(nested.poly_depth() == 2);
  CHECK(nested.var() == "y");
  CHECK(nested.base().var() == "x");
  for (const char* bad : {"", "float", "mod:", "mod:1", "mod:abc", "gf:4", "poly:int", "poly:int:"}) {
    CAPTURE(bad);
    try {
      io::parse_ring_spec(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("matrix encoding example") {
  const Matrix a = Matrix::from_ints(Ring::integers(), {{3, 4}, {6, 8}});
  CHECK(io::dump(io::matrix_to_json(a)) == R"({"ring":{"kind":"int"},"rows":[["3","4"],["6","8"]]})");
  const Ring zx = Ring::poly_over(Ring::modular(4));
  const Matrix p = io::matrix_from_json(io::parse(R"({"ring":{"kind":"poly","base":{"kind":"mod","modulus":"4"},"var":"x"},"rows":[[["1","2"],[]],[["4"],["0","0","3"]]]})"));
  CHECK(p.ring() == zx);
  CHECK(p.at(1, 0).is_zero());
  CHECK(io::dump(io::elem_to_json(p.at(1, 1))) == R"(["0","0","3"])");
  CHECK(io::dump(io::elem_to_json(p.at(0, 1))) == "[]");
}

TEST_CASE("input residues are reduced and integers accepted") {
  const Matrix a = io::matrix_from_json(io::parse(R"({"ring":{"kind":"mod","modulus":"4"},"rows":[["-1",9],["4","2"]]})"));
  CHECK(a == Matrix::from_ints(Ring::modular(4), {{3, 1}, {0, 2}}));
  const Matrix big = io::matrix_from_json(io::parse(R"({"ring":{"kind":"int"},"rows":[["123456789012345678901234567890"]]})"));
  CHECK(big.at(0, 0).str() == "123456789012345678901234567890");
}

TEST_CASE("canonical text round-trips byte for byte") {
  std::mt19937_64 rng(501);
  for (const Ring& ring : mt_test::sample_rings()) {
    for (int t = 0; t < 300; ++t) {
      const Matrix a = random_matrix(rng, ring, 1 + rng() % 4, 1 + rng() % 4);
      const std::string text = io::dump(io::matrix_to_json(a));
      const Matrix back = io::matrix_from_json(io::parse(text));
      REQUIRE(back == a);
      REQUIRE(io::dump(io::matrix_to_json(back)) == text);
    }
  }
}

TEST_CASE("malformed documents raise ParseError") {
  const char* docs[] = {
      "{",
      "[]",
      R"({"rows":[["1"]]})",
      R"({"ring":{"kind":"int"}})",
      R"({"ring":{"kind":"int"},"rows":[]})",
      R"({"ring":{"kind":"int"},"rows":[["1","2"],["3"]]})",
      R"({"ring":{"kind":"int"},"rows":[["x"]]})",
      R"({"ring":{"kind":"int"},"rows":[[1.5]]})",
      R"({"ring":{"kind":"mod","modulus":"1"},"rows":[["0"]]})",
      R"({"ring":{"kind":"poly","base":{"kind":"int"},"var":"x"},"rows":[["1"]]})",
      R"({"ring":{"kind":"nope"},"rows":[["1"]]})",
  };
  for (const char* doc : docs) {
    CAPTURE(doc);
    try {
      io::matrix_from_json(io::parse(doc));
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("reports number rows and columns from 1") {
  const Ring z = Ring::integers();
  const Matrix i2 = Matrix::identity(z, 2);
  CHECK(io::dump(io::verdict_to_json(check_vanishing_minors(i2))) ==
        R"({"structured":false,"witness":{"cols":[1,2],"rows":[1,2],"value":"1"}})");
  CHECK(io::dump(io::verdict_to_json(check_vanishing_minors(Matrix(z, 2, 2)))) == R"({"structured":true})");
  const Json probe = io::probe_report_to_json(probe_converse(i2));
  CHECK(probe["witness"]["probe"]["l"] == 2);
  CHECK(probe["witness"]["probe"]["j"] == 2);
  CHECK(probe["witness"]["entry"]["i"] == 1);
  CHECK(probe["witness"]["entry"]["k"] == 1);
  CHECK(probe["witness"]["lhs"] == "0");
  CHECK(probe["witness"]["rhs"] == "1");
}

TEST_CASE("equivalence report encoding") {
  const Json j = io::equivalence_report_to_json(exhaustive_characterization(Ring::modular(2), 2));
  CHECK(j["total"] == 16);
  CHECK(j["set_identity"] == 10);
  CHECK(j["set_minors"] == 10);
  CHECK(j["agree"] == true);
  CHECK(j["mismatches"].empty());
}
