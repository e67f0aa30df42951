#include "minortrace/io.hpp"

#include <cctype>

namespace minortrace::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Integer parse_decimal(std::string_view s) {
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (start == s.size()) fail("empty decimal '" + std::string(s) + "'");
  for (std::size_t t = start; t < s.size(); ++t) {
    if (!std::isdigit(static_cast<unsigned char>(s[t]))) fail("not a decimal integer: '" + std::string(s) + "'");
  }
  return Integer(std::string(s), 10);
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get_ref<const std::string&>());
  if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  fail("expected an integer, got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected an object, got " + j.dump());
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

Json index_pair(std::size_t a, std::size_t b) { return Json::array({a + 1, b + 1}); }

Json minor_to_json(const MinorIndex& idx, const Elem& value) {
  return Json{{"rows", index_pair(idx.i, idx.j)}, {"cols", index_pair(idx.k, idx.l)}, {"value", elem_to_json(value)}};
}

}  // namespace

Json ring_to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return Json{{"kind", "int"}};
    case RingKind::Modular: return Json{{"kind", "mod"}, {"modulus", ring.modulus().get_str()}};
    case RingKind::PrimeField: return Json{{"kind", "gf"}, {"p", ring.modulus().get_str()}};
    case RingKind::PolyOver: return Json{{"kind", "poly"}, {"base", ring_to_json(ring.base())}, {"var", ring.var()}};
  }
  return {};
}

Ring ring_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) fail("ring kind must be a string");
  const auto& k = kind.get_ref<const std::string&>();
  try {
    if (k == "int") return Ring::integers();
    if (k == "mod") return Ring::modular(integer_from_json(member(j, "modulus")));
    if (k == "gf") return Ring::prime_field(integer_from_json(member(j, "p")));
    if (k == "poly") {
      const Json& var = member(j, "var");
      if (!var.is_string()) fail("polynomial variable must be a string");
      return Ring::poly_over(ring_from_json(member(j, "base")), var.get<std::string>());
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(e.what());
  }
  fail("unknown ring kind '" + k + "'");
}

Ring parse_ring_spec(std::string_view spec) {
  try {
    if (spec == "int") return Ring::integers();
    if (spec.starts_with("mod:")) return Ring::modular(parse_decimal(spec.substr(4)));
    if (spec.starts_with("gf:")) return Ring::prime_field(parse_decimal(spec.substr(3)));
    if (spec.starts_with("poly:")) {
      auto rest = spec.substr(5);
      auto colon = rest.rfind(':');
      if (colon == std::string_view::npos) fail("polynomial spec needs a variable: '" + std::string(spec) + "'");
      return Ring::poly_over(parse_ring_spec(rest.substr(0, colon)), std::string(rest.substr(colon + 1)));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(e.what());
  }
  fail("unknown ring spec '" + std::string(spec) + "'");
}

Json value_to_json(const Ring& ring, const Value& v) {
  if (ring.kind() != RingKind::PolyOver) return ring.to_integer(v).get_str();
  const Ring base = ring.base();
  Json out = Json::array();
  for (const auto& c : std::get<Coeffs>(v.repr)) out.push_back(value_to_json(base, c));
  return out;
}

Value value_from_json(const Ring& ring, const Json& j) {
  if (ring.kind() != RingKind::PolyOver) return ring.from_integer(integer_from_json(j));
  if (!j.is_array()) fail("polynomial element must be an array, got " + j.dump());
  const Ring base = ring.base();
  Coeffs coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(value_from_json(base, c));
  return ring.canonical(Value(std::move(coeffs)));
}

Json elem_to_json(const Elem& e) { return value_to_json(e.ring(), e.value()); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(value_to_json(m.ring(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"ring", ring_to_json(m.ring())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const Ring ring = ring_from_json(member(j, "ring"));
  const Json& rows = member(j, "rows");
  if (!rows.is_array() || rows.empty()) fail("'rows' must be a non-empty array");
  const std::size_t cols = rows.front().is_array() ? rows.front().size() : 0;
  if (cols == 0) fail("rows must be non-empty arrays");
  std::vector<Value> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != cols) fail("rows must all have " + std::to_string(cols) + " entries");
    for (const auto& e : row) entries.push_back(value_from_json(ring, e));
  }
  return Matrix(ring, rows.size(), cols, std::move(entries));
}

Json verdict_to_json(const StructureVerdict& v) {
  Json out{{"structured", v.structured}};
  if (v.witness) out["witness"] = minor_to_json(v.witness->index, v.witness->value);
  return out;
}

Json probe_report_to_json(const ProbeReport& r) {
  Json out{{"structured", r.structured}};
  if (r.witness) {
    const auto& w = *r.witness;
    out["witness"] = Json{
        {"minor", minor_to_json(w.minor, w.minor_value)},
        {"probe", Json{{"l", w.probe_l + 1}, {"j", w.probe_j + 1}}},
        {"entry", Json{{"i", w.entry_i + 1}, {"k", w.entry_k + 1}}},
        {"lhs", elem_to_json(w.lhs)},
        {"rhs", elem_to_json(w.rhs)},
    };
  }
  return out;
}

Json factors_to_json(const OuterFactors& f) {
  return Json{{"col", matrix_to_json(f.col)}, {"row", matrix_to_json(f.row)}};
}

Json residuals_to_json(const InductionResiduals& r) {
  return Json{{"r1", matrix_to_json(r.r1)},
              {"r2", matrix_to_json(r.r2)},
              {"r3", matrix_to_json(r.r3)},
              {"r4", elem_to_json(r.r4)},
              {"all_zero", r.all_zero()}};
}

Json corollaries_to_json(const CorollaryResiduals& r) {
  return Json{{"ab_squared", matrix_to_json(r.ab_squared)},
              {"trace_aba", elem_to_json(r.trace_aba)},
              {"trace_a_squared", elem_to_json(r.trace_a_squared)},
              {"all_zero", r.all_zero()}};
}

Json equivalence_report_to_json(const EquivalenceReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) mismatches.push_back(matrix_to_json(m));
  return Json{{"ring", ring_to_json(r.ring)},        {"n", r.n},
              {"total", r.total},                    {"set_identity", r.set_identity},
              {"set_minors", r.set_minors},          {"spot_checks", r.spot_checks},
              {"agree", r.agree},                    {"mismatches", std::move(mismatches)}};
}

std::string dump(const Json& j) { return j.dump(); }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

}  // namespace minortrace::io
