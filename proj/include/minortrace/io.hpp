#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings for rings, elements, matrices and reports.
 *
 * Rings:    {"kind":"int"} | {"kind":"mod","modulus":"<decimal>"}
 *           | {"kind":"poly","base":<ring>,"var":"x"} | {"kind":"gf","p":"<decimal>"}
 * Elements: decimal strings for Integers, Modular and PrimeField;
 *           arrays of base elements (lowest degree first) for polynomials.
 * Matrices: {"ring":<ring>,"rows":[[<elem>,...],...]}
 *
 * Output is canonical: keys sorted, no insignificant whitespace. Reports
 * number rows and columns from 1.
 */

#include <string>
#include <string_view>

#include <json.hpp>

#include "minortrace/kernels.hpp"
#include "minortrace/oracle.hpp"
#include "minortrace/probe.hpp"

namespace minortrace::io {

using Json = nlohmann::json;

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

/// "int", "mod:<m>", "gf:<p>", "poly:<base spec>:<var>".
Ring parse_ring_spec(std::string_view spec);

Json value_to_json(const Ring& ring, const Value& v);
/// Accepts decimal strings or JSON integers for scalars; reduces residues.
Value value_from_json(const Ring& ring, const Json& j);

Json elem_to_json(const Elem& e);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json verdict_to_json(const StructureVerdict& v);
Json probe_report_to_json(const ProbeReport& r);
Json factors_to_json(const OuterFactors& f);
Json residuals_to_json(const InductionResiduals& r);
Json corollaries_to_json(const CorollaryResiduals& r);
Json equivalence_report_to_json(const EquivalenceReport& r);

/// Canonical single-line text of a JSON document.
std::string dump(const Json& j);
/// Parses text, mapping syntax errors to Error(ParseError).
Json parse(std::string_view text);

}  // namespace minortrace::io
