#include "jetlin/api.hpp"

#include <functional>
#include <map>

#include "jetlin/centralizer.hpp"
#include "jetlin/fixtures.hpp"
#include "jetlin/linearizer.hpp"
#include "jetlin/potential.hpp"
#include "jetlin/smalldivisors.hpp"

namespace jetlin {

const char* const kToolName = "jetlin";
const char* const kToolVersion = "0.1.0";

namespace {

// ---------------------------------------------------------------------------
// Argument helpers

const Json& member(const Json& args, const char* key, const std::string& what) {
  require(args.is_object(), Errc::ParseError, what + ": expected a JSON object of arguments");
  auto it = args.find(key);
  require(it != args.end(), Errc::ParseError, what + ": missing required argument '" + key + "'");
  return *it;
}

long long arg_integer(const Json& args, const char* key, long long fallback, long long lo,
                      long long hi) {
  if (!args.is_object() || !args.contains(key)) return fallback;
  const Json& j = args.at(key);
  require(j.is_number_integer(), Errc::ParseError,
          std::string("argument '") + key + "': expected an integer");
  long long v = j.get<long long>();
  require(v >= lo && v <= hi, Errc::ParseError,
          std::string("argument '") + key + "': value " + std::to_string(v) + " outside [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

long long require_integer(const Json& args, const char* key, long long lo, long long hi,
                          const std::string& what) {
  member(args, key, what);
  return arg_integer(args, key, lo, lo, hi);
}

long bits_arg(const Json& args) {
  return static_cast<long>(arg_integer(args, "bits", 256, BigFloat::kMinPrecision, 1l << 20));
}

// Order for verbs that take a germ: explicit argument wins, else the germ's
// stored order.
int order_or(const Json& args, int stored) {
  return static_cast<int>(arg_integer(args, "order", stored, 1, 4096));
}

int required_order(const Json& args, const std::string& what) {
  return static_cast<int>(require_integer(args, "order", 1, 4096, what));
}

// ---------------------------------------------------------------------------
// Result fragments

Json slot_json(const ResonantPair& p) {
  return Json{{"exponents", Json(p.index.e)}, {"coordinate", p.coordinate + 1}};
}

Json basis_json(const CentralizerBasis& cb) {
  Json arr = Json::array();
  for (const ExactGerm& g : cb.basis) arr.push_back(germ_to_json(g));
  return arr;
}

Json omega_entry_json(const OmegaEntry& e) {
  Json out{{"order", e.order}, {"exact_resonance", e.has_exact_resonance}};
  if (e.omega.is_finite()) {
    out["omega"] = e.omega.to_string();
    out["infinite"] = false;
  } else {
    out["omega"] = nullptr;
    out["infinite"] = true;
  }
  out["attained_at"] = e.attained_at ? slot_json(*e.attained_at) : Json(nullptr);
  return out;
}

// Flatten the nonlinear coefficients of tangent-to-identity basis germs into
// exact row vectors, so spans can be compared by rank.
std::vector<std::vector<ExactComplex>> basis_rows(const std::vector<ExactGerm>& basis) {
  std::vector<std::vector<ExactComplex>> rows;
  rows.reserve(basis.size());
  for (const ExactGerm& g : basis) {
    const JetSpace& sp = g.space();
    std::vector<ExactComplex> row;
    row.reserve(static_cast<size_t>(sp.tangent_identity_dimension()));
    for (int idx = sp.degree_offset(2); idx < sp.icount(); ++idx) {
      for (int j = 0; j < sp.vars(); ++j) row.push_back(g.component(j).coeff_internal(idx));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Verb handlers

Json verb_centralizer(const Json& args) {
  Matrix<ExactComplex> linear = matrix_from_json(member(args, "matrix", "centralizer"));
  const int m = required_order(args, "centralizer");
  CentralizerBasis cb = centralizer_basis(linear, m);
  Json slots = Json::array();
  for (const ResonantPair& p : cb.slots) slots.push_back(slot_json(p));
  Json result{{"order", cb.order},
              {"delta", cb.delta},
              {"slots", std::move(slots)},
              {"basis", basis_json(cb)}};

  if (args.contains("oracle")) {
    const Json& o = args.at("oracle");
    require(o.is_string(), Errc::ParseError, "oracle: expected \"elliptic\" or \"jordan2\"");
    const std::string kind = o.get<std::string>();
    require(linear.rows() == 2, Errc::PreconditionFailed,
            "closed-form oracles are defined for two variables");
    CentralizerBasis oracle(
        [&] {
          if (kind == "elliptic") {
            require(linear.at(0, 1).is_zero() && linear.at(1, 0).is_zero() &&
                        !linear.at(0, 0).is_zero() &&
                        linear.at(1, 1) == linear.at(0, 0).inverse(),
                    Errc::PreconditionFailed,
                    "elliptic oracle needs the linear part diag(lambda, 1/lambda)");
            return centralizer_oracle(OracleKind::Elliptic, linear.at(0, 0), m);
          }
          require(kind == "jordan2", Errc::ParseError,
                  "oracle: expected \"elliptic\" or \"jordan2\"");
          ExactComplex one = ring_one<ExactComplex>();
          require(linear.at(0, 0) == one && linear.at(0, 1) == one &&
                      linear.at(1, 0).is_zero() && linear.at(1, 1) == one,
                  Errc::PreconditionFailed,
                  "jordan2 oracle needs the standard unipotent block [[1,1],[0,1]]");
          return centralizer_oracle(OracleKind::Jordan2, one, m);
        }());
    Json oslots = Json::array();
    for (const ResonantPair& p : oracle.slots) oslots.push_back(slot_json(p));
    bool spans_equal = same_span(basis_rows(cb.basis), basis_rows(oracle.basis));
    Json oj{{"kind", kind},
            {"delta", oracle.delta},
            {"slots", std::move(oslots)},
            {"basis", basis_json(oracle)},
            {"spans_equal", spans_equal}};
    if (!spans_equal) {
      oj["note"] =
          "closed-form prediction spans a proper subspace of the computed kernel; the "
          "computed basis is the exact null space of the commutation operator";
    }
    result["oracle"] = std::move(oj);
  }
  return result;
}

Json verb_resonances(const Json& args) {
  EigenSpec spec = eigenspec_from_json(member(args, "eigenvalues", "resonances"));
  const int m = required_order(args, "resonances");
  ResonanceSet rs = resonances(spec, m);
  Json pairs = Json::array();
  for (const ResonantPair& p : rs.pairs) {
    Json entry = slot_json(p);
    entry["degree"] = p.index.degree();
    pairs.push_back(std::move(entry));
  }
  Json result{{"order", rs.order},
              {"count", pairs.size()},
              {"pairs", std::move(pairs)}};
  try {
    MultiplicativeInvariants mi = multiplicative_invariants(spec);
    result["l"] = mi.l;
    result["q"] = mi.q;
  } catch (const Error& e) {
    if (e.code() != Errc::UnclassifiableSpectrum) throw;
    result["l"] = nullptr;
    result["q"] = nullptr;
    result["invariants_note"] = e.detail();
  }
  return result;
}

ExactGerm exact_germ_arg(const Json& args, const char* key, const std::string& what,
                         const char* param_hint) {
  AnyGerm any = germ_from_json(member(args, key, what));
  if (std::holds_alternative<ExactGerm>(any)) return std::get<ExactGerm>(std::move(any));
  if (std::holds_alternative<ParamGerm>(any)) {
    fail(Errc::InexactCoefficients, what + ": got a parameter family; " + param_hint);
  }
  fail(Errc::InexactCoefficients, what + ": this verb needs exact (Gaussian rational) "
                                         "coefficients, not big-float ones");
}

Json obstruction_json(const Obstruction& ob) {
  return Json{{"degree", ob.degree},
              {"exponents", Json(ob.index.e)},
              {"coordinate", ob.coordinate + 1},
              {"value", exact_complex_to_json(ob.value)}};
}

Json verb_linearize(const Json& args) {
  ExactGerm f = exact_germ_arg(args, "germ", "linearize",
                               "one-parameter families go through the family verb");
  const int m = order_or(args, f.order());
  std::vector<ExactComplex> s;
  if (args.contains("params")) s = params_from_json(args.at("params"));
  LinearizationResult r = linearize(f, m, s);
  Json free_slots = Json::array();
  for (const ResonantPair& p : r.free_slots) free_slots.push_back(slot_json(p));
  Json result{{"status", r.status == LinearizationResult::Status::Linearized ? "linearized"
                                                                             : "obstructed"},
              {"order", m},
              {"h", germ_to_json(r.h)},
              {"free_slots", std::move(free_slots)}};
  if (r.obstruction) result["obstruction"] = obstruction_json(*r.obstruction);
  return result;
}

Json verb_family(const Json& args) {
  ParamGerm f = param_germ_from_json(member(args, "germ", "family"));
  const int m = order_or(args, f.order());
  try {
    FamilyLinearization r = family_linearize(f, m);
    Json report = Json::array();
    bool bound_holds = true;
    for (const DegreeReportEntry& e : r.degree_report) {
      long bound = r.d0 * e.index.degree();
      bound_holds = bound_holds && e.deg_t <= bound;
      report.push_back(Json{{"exponents", Json(e.index.e)},
                            {"deg_t", e.deg_t},
                            {"bound", bound}});
    }
    return Json{{"status", "linearized"},
                {"order", m},
                {"h", germ_to_json(r.h_t)},
                {"d0", r.d0},
                {"degree_report", std::move(report)},
                {"degree_bound_holds", bound_holds}};
  } catch (const FamilyObstructedError& e) {
    const ParamObstruction& w = e.witness();
    return Json{{"status", "obstructed"},
                {"order", m},
                {"witness", Json{{"degree", w.degree},
                                 {"exponents", Json(w.index.e)},
                                 {"coordinate", w.coordinate + 1},
                                 {"poly", param_poly_to_json(w.witness)}}}};
  }
}

Json verb_average(const Json& args) {
  ExactGerm f = exact_germ_arg(args, "germ", "average", "averaging needs a single exact germ");
  const long q = static_cast<long>(require_integer(args, "q", 1, 4096, "average"));
  const int m = order_or(args, f.order());
  ExactGerm k = args.contains("k")
                    ? exact_germ_arg(args, "k", "average", "averaging needs a single exact germ")
                    : ExactGerm::identity(jet_space(f.vars(), m));
  ExactGerm k0 = average_linearization(f, q, k, m);
  ExactGerm fp = (m == f.order()) ? f : project(f, m);
  bool conjugates = compose(k0, fp) ==
                    compose(ExactGerm::from_linear(k0.space_ptr(), fp.linear_part()), k0);
  return Json{{"order", m},
              {"q", q},
              {"k0", germ_to_json(k0)},
              {"conjugacy_verified", conjugates}};
}

Json verb_finite_order(const Json& args) {
  AnyGerm any = germ_from_json(member(args, "germ", "finite-order"));
  if (!std::holds_alternative<ExactGerm>(any)) {
    return Json{{"verdict", "inconclusive"},
                {"note", "identity of jets is only decidable over exact coefficients; "
                         "re-run with an exact germ"}};
  }
  ExactGerm f = std::get<ExactGerm>(std::move(any));
  const int m = order_or(args, f.order());
  FiniteOrderResult r = finite_order_test(f, m);
  Json result{{"order", m}, {"q", r.q}};
  switch (r.verdict) {
    case FiniteOrderVerdict::LinearizableWitness: {
      result["verdict"] = "linearizable-witness";
      ExactGerm fp = (m == f.order()) ? f : project(f, m);
      const ExactGerm& w = *r.witness;
      result["witness"] = germ_to_json(w);
      result["witness_verified"] =
          compose(w, fp) == compose(ExactGerm::from_linear(w.space_ptr(), fp.linear_part()), w);
      break;
    }
    case FiniteOrderVerdict::NotLinearizable:
      result["verdict"] = "not-linearizable";
      break;
    case FiniteOrderVerdict::Inconclusive:
      result["verdict"] = "inconclusive";
      break;
  }
  return result;
}

Json verb_embed(const Json& args) {
  Matrix<ExactComplex> linear = matrix_from_json(member(args, "matrix", "embed"));
  const int axis =
      static_cast<int>(require_integer(args, "axis", 1, linear.rows(), "embed"));
  ExactScalarJet phi = scalar_jet_from_json(member(args, "phi", "embed"));
  const int m = order_or(args, phi.space().order());
  ExactGerm g = embed_axis_map(linear, axis - 1, phi, m);
  return Json{{"order", m},
              {"axis", axis},
              {"axis_eigenvalue", exact_complex_to_json(linear.at(axis - 1, axis - 1))},
              {"germ", germ_to_json(g)}};
}

Json verb_omega(const Json& args) {
  EigenSpec spec = eigenspec_from_json(member(args, "eigenvalues", "omega"));
  const int m = required_order(args, "omega");
  const long bits = bits_arg(args);
  SmallDivisorProfile p = omega_profile(spec, m, bits);
  Json table = Json::array();
  for (const OmegaEntry& e : p.table) table.push_back(omega_entry_json(e));
  return Json{{"bits", p.bits}, {"table", std::move(table)}};
}

ThetaValue theta_from_json(const Json& j, long bits) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (text.find('/') != std::string::npos ||
        text.find_first_not_of("+-0123456789") == std::string::npos) {
      return parse_rational(text);
    }
    return BigFloat::from_string(text, bits);
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_object(), Errc::ParseError,
          "theta: expected {\"rational\": ...}, {\"real\": ...} or {\"special\": ...}");
  if (j.contains("rational")) return rational_from_json(j.at("rational"), "theta.rational");
  if (j.contains("real")) {
    long b = static_cast<long>(arg_integer(j, "bits", bits, BigFloat::kMinPrecision, 1l << 20));
    return big_float_from_json(j.at("real"), b, "theta.real");
  }
  const Json& special = member(j, "special", "theta");
  require(special.is_string(), Errc::ParseError, "theta.special: expected a string");
  const std::string name = special.get<std::string>();
  if (name == "golden") {
    long b = static_cast<long>(arg_integer(j, "bits", bits, BigFloat::kMinPrecision, 1l << 20));
    BigFloat five = BigFloat::from_long(5, b);
    return (five.sqrt() - BigFloat::from_long(1, b)) / BigFloat::from_long(2, b);
  }
  if (name == "liouville") {
    // Truncated Liouville series sum_{k<=terms} 10^{-k!} — an exact rational.
    long terms = static_cast<long>(arg_integer(j, "terms", 5, 1, 8));
    Rational sum(0);
    long factorial = 1;
    for (long k = 1; k <= terms; ++k) {
      factorial *= k;
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10u, static_cast<unsigned long>(factorial));
      sum += Rational(Integer(1), den);
    }
    sum.canonicalize();
    return sum;
  }
  fail(Errc::ParseError, "theta.special: expected \"golden\" or \"liouville\"");
}

Json verb_bruno(const Json& args) {
  const long bits = bits_arg(args);
  ThetaValue theta = theta_from_json(member(args, "theta", "bruno"), bits);
  const long cutoff = static_cast<long>(arg_integer(args, "cutoff", 20, 1, 4096));
  BigFloat bound = args.contains("bound")
                       ? big_float_from_json(args.at("bound"), bits, "bound")
                       : BigFloat::from_long(100, bits);
  BrunoReport r = bruno_check(theta, cutoff, bound, bits);
  const char* verdict = nullptr;
  switch (r.verdict.kind) {
    case BrunoVerdict::Kind::ConvergedAtCutoff: verdict = "converged-at-cutoff"; break;
    case BrunoVerdict::Kind::ExceededBound: verdict = "exceeded-bound"; break;
    case BrunoVerdict::Kind::RationalTheta: verdict = "rational-theta"; break;
  }
  Json digits = Json::array();
  for (const Integer& d : r.digits) digits.push_back(d.get_str());
  Json convergents = Json::array();
  for (const auto& [p, q] : r.convergents) {
    convergents.push_back(Json{{"p", p.get_str()}, {"q", q.get_str()}});
  }
  Json sums = Json::array();
  for (const BigFloat& s : r.partial_sums) sums.push_back(s.to_string());
  Json result{{"verdict", verdict},
              {"at_k", r.verdict.at_k},
              {"cutoff", r.requested_cutoff},
              {"bits", r.bits},
              {"bound", r.bound.to_string()},
              {"digits", std::move(digits)},
              {"convergents", std::move(convergents)},
              {"partial_sums", std::move(sums)}};
  result["bruno_sum"] =
      r.partial_sums.empty() ? Json("0") : Json(r.partial_sums.back().to_string());
  return result;
}

Json verb_torsion_compare(const Json& args) {
  EigenSpec spec = eigenspec_from_json(member(args, "eigenvalues", "torsion-compare"));
  const long q = static_cast<long>(require_integer(args, "q", 1, 4096, "torsion-compare"));
  const int m = required_order(args, "torsion-compare");
  const long bits = bits_arg(args);
  TorsionComparison tc = torsion_compare(spec, q, m, bits);
  return Json{{"q", tc.q},
              {"order", m},
              {"bits", bits},
              {"omega_base", omega_entry_json(tc.omega_base)},
              {"omega_powered", omega_entry_json(tc.omega_powered)},
              {"tolerance", tc.tolerance.to_string()},
              {"certified", tc.certified}};
}

Json verb_bernstein(const Json& args) {
  const long bits = bits_arg(args);
  std::vector<BigComplex> coeffs = poly_from_json(member(args, "poly", "bernstein"), bits);
  CompactSetModel set = set_from_json(member(args, "set", "bernstein"), bits);
  const long boundary = static_cast<long>(arg_integer(args, "boundary_count", 2048, 2, 1 << 22));

  std::vector<BigComplex> pts;
  if (args.contains("test_points")) {
    const Json& arr = args.at("test_points");
    require(arr.is_array(), Errc::ParseError, "test_points: expected an array");
    require(arr.size() <= (1u << 22), Errc::ParseError, "test_points: too many points");
    for (size_t k = 0; k < arr.size(); ++k) {
      pts.push_back(
          big_complex_from_json(arr[k], bits, "test_points[" + std::to_string(k) + "]"));
    }
  } else {
    // Deterministic random sweep in the square [-radius, radius]^2.
    const long count = static_cast<long>(arg_integer(args, "samples", 1000, 1, 1 << 22));
    const uint64_t seed = static_cast<uint64_t>(arg_integer(args, "seed", 0, 0, (1ll << 62)));
    BigFloat radius = args.contains("radius")
                          ? big_float_from_json(args.at("radius"), bits, "radius")
                          : BigFloat::from_long(3, bits);
    RationalSource rng(seed);
    pts.reserve(static_cast<size_t>(count));
    for (long k = 0; k < count; ++k) {
      // 2^-53-grained uniforms are plenty for a sampling sweep.
      auto coord = [&] {
        double u = static_cast<double>(rng.next_u64() >> 11) * 0x1p-53;
        return BigFloat::from_double(2.0 * u - 1.0, bits) * radius;
      };
      BigComplex z(bits);
      z.re = coord();
      z.im = coord();
      pts.push_back(std::move(z));
    }
  }

  BernsteinReport rep = bernstein_check(coeffs, set, pts, boundary, bits);
  return Json{{"degree", rep.degree},
              {"boundary_count", rep.boundary_count},
              {"test_count", rep.test_count},
              {"sup_norm", rep.sup_norm.to_string()},
              {"max_ratio", rep.max_ratio.to_string()},
              {"tolerance", rep.tolerance.to_string()},
              {"violations", rep.violations}};
}

Json verb_radius_bound(const Json& args) {
  const long bits = bits_arg(args);
  GrowthCertificate cert =
      certificate_from_json(member(args, "certificate", "radius-bound"), bits);
  BigComplex at = big_complex_from_json(member(args, "at", "radius-bound"), bits, "at");
  const long samples = static_cast<long>(arg_integer(args, "samples", 1024, 2, 1 << 22));
  BigFloat r = radius_lower_bound(cert, at, samples, bits);
  Json result{{"bits", bits}, {"samples", samples}};
  if (r.is_finite()) {
    result["radius"] = r.to_string();
    result["infinite"] = false;
  } else {
    result["radius"] = nullptr;
    result["infinite"] = true;
  }
  return result;
}

Json verb_fixtures(const Json& args) {
  const uint64_t seed = static_cast<uint64_t>(arg_integer(args, "seed", 0, 0, (1ll << 62)));
  std::vector<Fixture> fixtures = make_fixtures(seed);
  Json files = Json::array();
  for (const Fixture& f : fixtures) {
    files.push_back(Json{{"name", f.name}, {"content", f.content}});
  }
  return Json{{"seed", seed}, {"count", files.size()}, {"files", std::move(files)}};
}

using Handler = Json (*)(const Json&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"centralizer", verb_centralizer},
      {"resonances", verb_resonances},
      {"linearize", verb_linearize},
      {"family", verb_family},
      {"average", verb_average},
      {"finite-order", verb_finite_order},
      {"embed", verb_embed},
      {"omega", verb_omega},
      {"bruno", verb_bruno},
      {"torsion-compare", verb_torsion_compare},
      {"bernstein", verb_bernstein},
      {"radius-bound", verb_radius_bound},
      {"fixtures", verb_fixtures},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verb_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, handler] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

Json run_verb(const std::string& verb, const Json& args) {
  require(args.is_object() || args.is_null(), Errc::ParseError,
          "arguments must be a JSON object");
  const Json a = args.is_null() ? Json::object() : args;
  for (const auto& [name, handler] : handlers()) {
    if (name != verb) continue;
    Json result = handler(a);
    return Json{{"format_version", 1},
                {"tool", kToolName},
                {"tool_version", kToolVersion},
                {"verb", verb},
                {"inputs", a},
                {"result", std::move(result)}};
  }
  fail(Errc::UnknownVerb, "unknown verb '" + verb + "'; expected one of: " + [] {
    std::string all;
    for (const std::string& n : verb_names()) {
      if (!all.empty()) all += ", ";
      all += n;
    }
    return all;
  }());
}

}  // namespace jetlin
