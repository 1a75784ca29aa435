#include "jetlin/germ_io.hpp"

#include <fstream>
#include <sstream>

namespace jetlin {

namespace {

long long integer_field(const Json& j, const std::string& what, long long lo, long long hi) {
  require(j.is_number_integer(), Errc::ParseError, what + ": expected an integer");
  long long v = j.get<long long>();
  require(v >= lo && v <= hi, Errc::ParseError,
          what + ": value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]");
  return v;
}

const Json& member(const Json& j, const char* key, const std::string& what) {
  require(j.is_object(), Errc::ParseError, what + ": expected a JSON object");
  auto it = j.find(key);
  require(it != j.end(), Errc::ParseError, what + ": missing field '" + key + "'");
  return *it;
}

// Guard against jet spaces whose monomial table would not fit in memory.
void require_reasonable_space(long long n, long long m, const std::string& what) {
  __int128 count = 1;  // C(n+m, n), the internal table size
  for (long long k = 1; k <= n; ++k) {
    count = count * (m + k) / k;
    require(count <= (1ll << 24), Errc::ParseError, what + ": jet space too large");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalars

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    Rational q(Integer(std::to_string(j.get<long long>())));
    q.canonicalize();
    return q;
  }
  require(!j.is_number(), Errc::ParseError,
          what + ": non-integer numeric literals lose precision; write the value as a string");
  fail(Errc::ParseError, what + ": expected a rational string \"p/q\"");
}

Json exact_complex_to_json(const ExactComplex& z) {
  return Json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

ExactComplex exact_complex_from_json(const Json& j, const std::string& what) {
  if (j.is_string() || j.is_number()) {
    return ExactComplex(rational_from_json(j, what), Rational(0));
  }
  require(j.is_object(), Errc::ParseError,
          what + ": expected a complex value {\"re\": ..., \"im\": ...}");
  Rational re(0), im(0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "re") {
      re = rational_from_json(it.value(), what + ".re");
    } else if (it.key() == "im") {
      im = rational_from_json(it.value(), what + ".im");
    } else {
      fail(Errc::ParseError, what + ": unknown field '" + it.key() + "' in complex value");
    }
  }
  return ExactComplex(std::move(re), std::move(im));
}

Json big_float_to_json(const BigFloat& x) { return x.to_string(); }

BigFloat big_float_from_json(const Json& j, long bits, const std::string& what) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (text.find('/') != std::string::npos) {
      Rational q = parse_rational(text);
      return BigComplex::from_exact(ExactComplex(q, Rational(0)), bits).re;
    }
    return BigFloat::from_string(text, bits);
  }
  if (j.is_number_integer()) return BigFloat::from_long(j.get<long>(), bits);
  require(!j.is_number(), Errc::ParseError,
          what + ": non-integer numeric literals lose precision; write the value as a string");
  fail(Errc::ParseError, what + ": expected a decimal string");
}

Json big_complex_to_json(const BigComplex& z) {
  return Json{{"re", big_float_to_json(z.re)}, {"im", big_float_to_json(z.im)}};
}

BigComplex big_complex_from_json(const Json& j, long bits, const std::string& what) {
  if (j.is_string() || j.is_number()) {
    BigComplex z(bits);
    z.re = big_float_from_json(j, bits, what);
    return z;
  }
  require(j.is_object(), Errc::ParseError,
          what + ": expected a complex value {\"re\": ..., \"im\": ...}");
  BigComplex z(bits);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "re") {
      z.re = big_float_from_json(it.value(), bits, what + ".re");
    } else if (it.key() == "im") {
      z.im = big_float_from_json(it.value(), bits, what + ".im");
    } else {
      fail(Errc::ParseError, what + ": unknown field '" + it.key() + "' in complex value");
    }
  }
  return z;
}

Json param_poly_to_json(const ExactParamPoly& p) {
  Json arr = Json::array();
  for (const ExactComplex& c : p.coefficients()) arr.push_back(exact_complex_to_json(c));
  return arr;
}

ExactParamPoly param_poly_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) {
    // A bare scalar is shorthand for a constant polynomial.
    return ExactParamPoly::constant(exact_complex_from_json(j, what));
  }
  require(j.size() <= 4096, Errc::ParseError, what + ": polynomial degree too large");
  std::vector<ExactComplex> coeffs;
  coeffs.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k) {
    coeffs.push_back(exact_complex_from_json(j[k], what + "[" + std::to_string(k) + "]"));
  }
  return ExactParamPoly::from_coefficients(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Germ files

namespace {

template <typename T, typename Ser>
Json germ_to_json_impl(const GermJet<T>& g, const std::string& ring, Ser serialize) {
  const JetSpace& sp = g.space();
  Json terms = Json::array();
  for (int j = 0; j < sp.vars(); ++j) {
    for (int idx = 1; idx < sp.icount(); ++idx) {
      const T& v = g.component(j).coeff_internal(idx);
      if (ring_is_zero(v)) continue;
      terms.push_back(Json{{"coordinate", j + 1},
                           {"exponents", Json(sp.monomial(idx).e)},
                           {"value", serialize(v)}});
    }
  }
  return Json{{"variables", sp.vars()},
              {"order", sp.order()},
              {"coefficient_ring", ring},
              {"terms", std::move(terms)}};
}

template <typename T, typename Par>
GermJet<T> germ_from_json_impl(const Json& j, int n, int m, Par parse) {
  auto space = jet_space(n, m);
  std::vector<ScalarJet<T>> comps(static_cast<size_t>(n), ScalarJet<T>(space));
  const Json empty = Json::array();
  const Json& terms = j.contains("terms") ? j.at("terms") : empty;
  require(terms.is_array(), Errc::ParseError, "terms: expected an array");
  for (size_t k = 0; k < terms.size(); ++k) {
    const std::string what = "terms[" + std::to_string(k) + "]";
    const Json& t = terms[k];
    require(t.is_object(), Errc::ParseError, what + ": expected an object");
    long long coord = integer_field(member(t, "coordinate", what), what + ".coordinate", 1, n);
    const Json& ex = member(t, "exponents", what);
    require(ex.is_array(), Errc::ParseError, what + ".exponents: expected an array");
    require(static_cast<int>(ex.size()) == n, Errc::ParseError,
            what + ".exponents: expected " + std::to_string(n) + " entries, got " +
                std::to_string(ex.size()));
    std::vector<int> e(static_cast<size_t>(n));
    long long degree = 0;
    for (int v = 0; v < n; ++v) {
      e[static_cast<size_t>(v)] = static_cast<int>(
          integer_field(ex[static_cast<size_t>(v)],
                        what + ".exponents[" + std::to_string(v) + "]", 0, m));
      degree += e[static_cast<size_t>(v)];
    }
    T value = parse(member(t, "value", what), what + ".value");
    if (degree == 0) {
      require(ring_is_zero(value), Errc::InvariantViolation,
              what + ": nonzero constant term (germs must fix the origin)");
      continue;
    }
    require(degree <= m, Errc::ParseError,
            what + ": monomial degree " + std::to_string(degree) + " exceeds order " +
                std::to_string(m));
    comps[static_cast<size_t>(coord - 1)].add_coeff_internal(
        space->internal_rank(MultiIndex(std::move(e))), value);
  }
  return GermJet<T>(space, std::move(comps));
}

struct RingTag {
  enum Kind { Exact, BigFloatRing, ParamExact } kind;
  long bits = 0;
};

RingTag ring_tag_from(const Json& j) {
  const Json& r = member(j, "coefficient_ring", "germ");
  require(r.is_string(), Errc::ParseError, "coefficient_ring: expected a string");
  const std::string text = r.get<std::string>();
  if (text == "exact") return {RingTag::Exact, 0};
  if (text == "param-exact") return {RingTag::ParamExact, 0};
  if (text.rfind("bigfloat:", 0) == 0) {
    const std::string digits = text.substr(9);
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            Errc::ParseError, "coefficient_ring: malformed precision in '" + text + "'");
    long bits = std::stol(digits);
    require(bits >= BigFloat::kMinPrecision && bits <= (1l << 20), Errc::ParseError,
            "coefficient_ring: precision must be in [53, 2^20]");
    return {RingTag::BigFloatRing, bits};
  }
  fail(Errc::ParseError, "coefficient_ring: unknown ring '" + text + "'");
}

std::pair<int, int> germ_shape(const Json& j) {
  int n = static_cast<int>(integer_field(member(j, "variables", "germ"), "variables", 1, 16));
  int m = static_cast<int>(integer_field(member(j, "order", "germ"), "order", 1, 4096));
  require_reasonable_space(n, m, "germ");
  return {n, m};
}

}  // namespace

Json germ_to_json(const ExactGerm& g) {
  return germ_to_json_impl(g, "exact", exact_complex_to_json);
}

Json germ_to_json(const FloatGerm& g, long bits) {
  return germ_to_json_impl(g, "bigfloat:" + std::to_string(bits),
                           [](const BigComplex& z) { return big_complex_to_json(z); });
}

Json germ_to_json(const ParamGerm& g) {
  return germ_to_json_impl(g, "param-exact", param_poly_to_json);
}

Json germ_to_json(const AnyGerm& g, long default_bits) {
  if (const auto* e = std::get_if<ExactGerm>(&g)) return germ_to_json(*e);
  if (const auto* p = std::get_if<ParamGerm>(&g)) return germ_to_json(*p);
  const auto& f = std::get<FloatGerm>(g);
  long bits = default_bits;
  const JetSpace& sp = f.space();
  for (int j = 0; j < sp.vars(); ++j) {
    for (int idx = 1; idx < sp.icount(); ++idx) {
      bits = std::max(bits, f.component(j).coeff_internal(idx).precision());
    }
  }
  return germ_to_json(f, bits);
}

AnyGerm germ_from_json(const Json& j) {
  require(j.is_object(), Errc::ParseError, "germ: expected a JSON object");
  auto [n, m] = germ_shape(j);
  RingTag ring = ring_tag_from(j);
  switch (ring.kind) {
    case RingTag::Exact:
      return germ_from_json_impl<ExactComplex>(j, n, m, exact_complex_from_json);
    case RingTag::ParamExact:
      return germ_from_json_impl<ExactParamPoly>(j, n, m, param_poly_from_json);
    case RingTag::BigFloatRing:
    default:
      return germ_from_json_impl<BigComplex>(
          j, n, m, [bits = ring.bits](const Json& v, const std::string& what) {
            return big_complex_from_json(v, bits, what);
          });
  }
}

ExactGerm exact_germ_from_json(const Json& j) {
  AnyGerm g = germ_from_json(j);
  require(std::holds_alternative<ExactGerm>(g), Errc::InexactCoefficients,
          "this operation needs a germ with exact coefficients");
  return std::get<ExactGerm>(std::move(g));
}

ParamGerm param_germ_from_json(const Json& j) {
  AnyGerm g = germ_from_json(j);
  if (std::holds_alternative<ParamGerm>(g)) return std::get<ParamGerm>(std::move(g));
  require(std::holds_alternative<ExactGerm>(g), Errc::InexactCoefficients,
          "a parameter family needs exact or param-exact coefficients");
  // Promote a constant (parameter-free) germ into the parameter ring.
  const ExactGerm& e = std::get<ExactGerm>(g);
  return convert_germ<ExactParamPoly>(
      e, [](const ExactComplex& c) { return ExactParamPoly::constant(c); });
}

ExactScalarJet scalar_jet_from_json(const Json& j) {
  AnyGerm g = germ_from_json(j);
  require(std::holds_alternative<ExactGerm>(g), Errc::InexactCoefficients,
          "scalar jets must use exact coefficients");
  const ExactGerm& e = std::get<ExactGerm>(g);
  require(e.vars() == 1, Errc::DimensionMismatch, "scalar jets live in one variable");
  return e.component(0);
}

// ---------------------------------------------------------------------------
// Matrices

Json matrix_to_json(const Matrix<ExactComplex>& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(exact_complex_to_json(a.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"entries", std::move(rows)}};
}

Matrix<ExactComplex> matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? member(j, "entries", "matrix") : j;
  require(rows.is_array() && !rows.empty(), Errc::ParseError,
          "matrix: expected a non-empty array of rows");
  const int n = static_cast<int>(rows.size());
  require(n <= 16, Errc::ParseError, "matrix: at most 16 rows supported");
  Matrix<ExactComplex> a(n, n);
  for (int r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<size_t>(r)];
    const std::string what = "matrix.entries[" + std::to_string(r) + "]";
    require(row.is_array() && static_cast<int>(row.size()) == n, Errc::ParseError,
            what + ": expected " + std::to_string(n) + " entries (square matrix)");
    for (int c = 0; c < n; ++c) {
      a.at(r, c) =
          exact_complex_from_json(row[static_cast<size_t>(c)], what + "[" + std::to_string(c) + "]");
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Eigenvalue specifications

Json eigenspec_to_json(const EigenSpec& spec) {
  if (spec.is_exact()) {
    Json values = Json::array();
    for (const ExactComplex& v : spec.exact_values()) values.push_back(exact_complex_to_json(v));
    return Json{{"kind", "exact"}, {"values", std::move(values)}};
  }
  const SymbolicSpectrum& s = spec.symbolic_form();
  Json out{{"kind", "symbolic"},
           {"torsion_order", s.torsion_order},
           {"a", Json(s.a)},
           {"b", Json(s.b)}};
  if (s.theta_rational) {
    out["theta"] = Json{{"rational", rational_to_string(*s.theta_rational)}};
  } else if (s.theta_real) {
    out["theta"] = Json{{"real", s.theta_real->to_string()},
                        {"bits", s.theta_real->precision()},
                        {"assume_irrational", true}};
  }
  return out;
}

EigenSpec eigenspec_from_json(const Json& j) {
  const Json& kind = member(j, "kind", "eigenvalues");
  require(kind.is_string(), Errc::ParseError, "eigenvalues.kind: expected a string");
  const std::string text = kind.get<std::string>();
  if (text == "exact") {
    const Json& values = member(j, "values", "eigenvalues");
    require(values.is_array() && !values.empty(), Errc::ParseError,
            "eigenvalues.values: expected a non-empty array");
    std::vector<ExactComplex> out;
    out.reserve(values.size());
    for (size_t k = 0; k < values.size(); ++k) {
      out.push_back(
          exact_complex_from_json(values[k], "eigenvalues.values[" + std::to_string(k) + "]"));
    }
    return EigenSpec::exact(std::move(out));
  }
  require(text == "symbolic", Errc::ParseError,
          "eigenvalues.kind: expected \"exact\" or \"symbolic\"");
  SymbolicSpectrum s;
  s.torsion_order = static_cast<long>(
      integer_field(member(j, "torsion_order", "eigenvalues"), "eigenvalues.torsion_order", 1,
                    1l << 20));
  const Json& a = member(j, "a", "eigenvalues");
  const Json& b = member(j, "b", "eigenvalues");
  require(a.is_array() && b.is_array() && a.size() == b.size() && !a.empty(), Errc::ParseError,
          "eigenvalues: 'a' and 'b' must be non-empty arrays of equal length");
  for (size_t k = 0; k < a.size(); ++k) {
    s.a.push_back(static_cast<long>(integer_field(
        a[k], "eigenvalues.a[" + std::to_string(k) + "]", -(1ll << 40), 1ll << 40)));
    s.b.push_back(static_cast<long>(integer_field(
        b[k], "eigenvalues.b[" + std::to_string(k) + "]", -(1ll << 40), 1ll << 40)));
  }
  if (j.contains("theta")) {
    const Json& theta = j.at("theta");
    require(theta.is_object(), Errc::ParseError, "eigenvalues.theta: expected an object");
    if (theta.contains("rational")) {
      s.theta_rational = rational_from_json(theta.at("rational"), "eigenvalues.theta.rational");
    } else {
      const Json& real = member(theta, "real", "eigenvalues.theta");
      long bits = theta.contains("bits")
                      ? integer_field(theta.at("bits"), "eigenvalues.theta.bits",
                                      BigFloat::kMinPrecision, 1l << 20)
                      : 256;
      s.theta_real = big_float_from_json(real, bits, "eigenvalues.theta.real");
      require(theta.contains("assume_irrational") && theta.at("assume_irrational").is_boolean() &&
                  theta.at("assume_irrational").get<bool>(),
              Errc::ParseError,
              "eigenvalues.theta: a real theta needs \"assume_irrational\": true (a finite "
              "decimal cannot certify irrationality by itself)");
    }
  }
  return EigenSpec::symbolic(std::move(s));
}

// ---------------------------------------------------------------------------
// Compact sets, certificates, polynomials, parameter vectors

Json set_to_json(const CompactSetModel& set) {
  if (const auto* d = std::get_if<DiskSet>(&set)) {
    return Json{{"kind", "disk"},
                {"center", big_complex_to_json(d->center)},
                {"radius", big_float_to_json(d->radius)}};
  }
  const auto& s = std::get<SegmentSet>(set);
  return Json{{"kind", "segment"}, {"a", big_complex_to_json(s.a)}, {"b", big_complex_to_json(s.b)}};
}

CompactSetModel set_from_json(const Json& j, long bits) {
  const Json& kind = member(j, "kind", "set");
  require(kind.is_string(), Errc::ParseError, "set.kind: expected a string");
  const std::string text = kind.get<std::string>();
  if (text == "disk") {
    DiskSet d;
    d.center = big_complex_from_json(member(j, "center", "set"), bits, "set.center");
    d.radius = big_float_from_json(member(j, "radius", "set"), bits, "set.radius");
    return d;
  }
  require(text == "segment", Errc::ParseError, "set.kind: expected \"disk\" or \"segment\"");
  SegmentSet s;
  s.a = big_complex_from_json(member(j, "a", "set"), bits, "set.a");
  s.b = big_complex_from_json(member(j, "b", "set"), bits, "set.b");
  return s;
}

Json certificate_to_json(const GrowthCertificate& cert) {
  return Json{{"c_set", set_to_json(cert.c_set)},
              {"k_set", set_to_json(cert.k_set)},
              {"rho1", big_float_to_json(cert.rho1)},
              {"degree_factor", cert.degree_factor}};
}

GrowthCertificate certificate_from_json(const Json& j, long bits) {
  GrowthCertificate cert;
  cert.c_set = set_from_json(member(j, "c_set", "certificate"), bits);
  cert.k_set = set_from_json(member(j, "k_set", "certificate"), bits);
  cert.rho1 = big_float_from_json(member(j, "rho1", "certificate"), bits, "certificate.rho1");
  cert.degree_factor = static_cast<long>(
      integer_field(member(j, "degree_factor", "certificate"), "certificate.degree_factor", 1,
                    1l << 20));
  return cert;
}

Json poly_to_json(const std::vector<BigComplex>& coefficients) {
  Json arr = Json::array();
  for (const BigComplex& c : coefficients) arr.push_back(big_complex_to_json(c));
  return Json{{"coefficients", std::move(arr)}};
}

std::vector<BigComplex> poly_from_json(const Json& j, long bits) {
  const Json& arr = j.is_object() ? member(j, "coefficients", "polynomial") : j;
  require(arr.is_array(), Errc::ParseError, "polynomial: expected an array of coefficients");
  require(arr.size() <= 4096, Errc::ParseError, "polynomial: degree too large");
  std::vector<BigComplex> out;
  out.reserve(arr.size());
  for (size_t k = 0; k < arr.size(); ++k) {
    out.push_back(
        big_complex_from_json(arr[k], bits, "polynomial.coefficients[" + std::to_string(k) + "]"));
  }
  return out;
}

Json params_to_json(const std::vector<ExactComplex>& s) {
  Json arr = Json::array();
  for (const ExactComplex& v : s) arr.push_back(exact_complex_to_json(v));
  return Json{{"values", std::move(arr)}};
}

std::vector<ExactComplex> params_from_json(const Json& j) {
  const Json& arr = j.is_object() ? member(j, "values", "params") : j;
  require(arr.is_array(), Errc::ParseError, "params: expected an array of values");
  require(arr.size() <= 65536, Errc::ParseError, "params: too many values");
  std::vector<ExactComplex> out;
  out.reserve(arr.size());
  for (size_t k = 0; k < arr.size(); ++k) {
    out.push_back(exact_complex_from_json(arr[k], "params.values[" + std::to_string(k) + "]"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// File plumbing

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::IoError, "cannot open '" + path + "' for reading");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    fail(Errc::ParseError, "'" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  require(out.good(), Errc::IoError, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  require(out.good(), Errc::IoError, "failed writing '" + path + "'");
}

}  // namespace jetlin
