#pragma once

// JSON (de)serialization for every on-disk object the tool exchanges:
// scalars, germ files, matrices, eigenvalue specifications, compact sets,
// growth certificates, polynomial coefficient lists, and parameter vectors.
//
// Conventions shared by every reader here:
//   - rationals are strings "p/q" (or "p"); plain JSON integers are accepted,
//     but non-integer JSON numbers are rejected with ParseError because their
//     binary-double reading would silently corrupt the value;
//   - complex values are {"re": ..., "im": ...} with either part optional,
//     and a bare string/integer is shorthand for a real value;
//   - big-float values additionally accept decimal strings ("1.25e-3").
// Writers always emit the explicit forms.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jetlin/jets.hpp"
#include "jetlin/linalg.hpp"
#include "jetlin/potential.hpp"
#include "jetlin/rings.hpp"
#include "jetlin/spectrum.hpp"

namespace jetlin {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& what);

Json exact_complex_to_json(const ExactComplex& z);
ExactComplex exact_complex_from_json(const Json& j, const std::string& what);

Json big_float_to_json(const BigFloat& x);
BigFloat big_float_from_json(const Json& j, long bits, const std::string& what);

Json big_complex_to_json(const BigComplex& z);
BigComplex big_complex_from_json(const Json& j, long bits, const std::string& what);

Json param_poly_to_json(const ExactParamPoly& p);
ExactParamPoly param_poly_from_json(const Json& j, const std::string& what);

// ---------------------------------------------------------------------------
// Germ files
//
// {"variables": n, "order": m,
//  "coefficient_ring": "exact" | "bigfloat:<bits>" | "param-exact",
//  "terms": [{"coordinate": 1-based, "exponents": [..n ints..], "value": ...}]}
//
// Degree-1 terms define the linear part; missing terms are zero; duplicate
// terms accumulate.  A nonzero constant term is InvariantViolation; a wrong
// exponent arity, a degree above the order, or an out-of-range coordinate is
// ParseError.

using AnyGerm = std::variant<ExactGerm, FloatGerm, ParamGerm>;

Json germ_to_json(const ExactGerm& g);
Json germ_to_json(const FloatGerm& g, long bits);
Json germ_to_json(const ParamGerm& g);
Json germ_to_json(const AnyGerm& g, long default_bits);

AnyGerm germ_from_json(const Json& j);
ExactGerm exact_germ_from_json(const Json& j);
ParamGerm param_germ_from_json(const Json& j);

// Scalar jets in one variable (embedding targets) travel as 1-variable germ
// files; this helper unwraps the single component.
ExactScalarJet scalar_jet_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Linear maps: {"entries": [[row 0...], [row 1...], ...]} of exact complex.

Json matrix_to_json(const Matrix<ExactComplex>& a);
Matrix<ExactComplex> matrix_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Eigenvalue specifications.
//
// {"kind": "exact", "values": [complex...]}
// {"kind": "symbolic", "torsion_order": q, "a": [...], "b": [...],
//  "theta": {"rational": "p/q"} | {"real": "...", "bits": B,
//            "assume_irrational": true}}         (theta optional if all b = 0)

Json eigenspec_to_json(const EigenSpec& spec);
EigenSpec eigenspec_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Compact sets, growth certificates, polynomial coefficient lists.
//
// Set:  {"kind": "disk", "center": complex, "radius": real}
//       {"kind": "segment", "a": complex, "b": complex}
// Cert: {"c_set": set, "k_set": set, "rho1": real, "degree_factor": d}
// Poly: {"coefficients": [complex...]} ascending powers (bare array accepted).

Json set_to_json(const CompactSetModel& set);
CompactSetModel set_from_json(const Json& j, long bits);

Json certificate_to_json(const GrowthCertificate& cert);
GrowthCertificate certificate_from_json(const Json& j, long bits);

Json poly_to_json(const std::vector<BigComplex>& coefficients);
std::vector<BigComplex> poly_from_json(const Json& j, long bits);

// Parameter vectors for kernel-direction choices ({"values": [...]} or array).
Json params_to_json(const std::vector<ExactComplex>& s);
std::vector<ExactComplex> params_from_json(const Json& j);

// ---------------------------------------------------------------------------
// File plumbing (CLI layer only; the API layer works on parsed JSON).

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace jetlin
