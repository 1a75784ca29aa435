#include "jetlin/potential.hpp"

#include <algorithm>

#include "jetlin/errors.hpp"

namespace jetlin {

namespace {

void validate_set(const CompactSetModel& set) {
  if (std::holds_alternative<DiskSet>(set)) {
    const DiskSet& d = std::get<DiskSet>(set);
    require(d.radius.is_finite() && !d.radius.is_negative() && !d.radius.is_zero(),
            Errc::InvariantViolation, "disk radius must be positive");
  } else {
    const SegmentSet& s = std::get<SegmentSet>(set);
    require(!(s.a == s.b), Errc::InvariantViolation,
            "segment endpoints must be distinct");
  }
}

}  // namespace

BigFloat green_value(const CompactSetModel& set, const BigComplex& z) {
  validate_set(set);
  if (std::holds_alternative<DiskSet>(set)) {
    const DiskSet& d = std::get<DiskSet>(set);
    const long prec = std::max(z.precision(), d.center.precision());
    BigFloat ratio = (z - d.center).abs() / d.radius;
    if (ratio <= BigFloat::from_long(1, prec)) return BigFloat::from_long(0, prec);
    return ratio.log();
  }
  const SegmentSet& s = std::get<SegmentSet>(set);
  const long prec = std::max(z.precision(), std::max(s.a.precision(), s.b.precision()));
  BigComplex two(BigFloat::from_long(2, prec), BigFloat::from_long(0, prec));
  BigComplex one(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
  BigComplex w = (z * two - s.a - s.b) / (s.b - s.a);
  BigComplex root = (w * w - one).sqrt();
  // The two branch values w +- root have product of moduli 1; the Green's
  // function is the log of the larger one.
  BigFloat m1 = (w + root).abs();
  BigFloat m2 = (w - root).abs();
  BigFloat larger = m1 < m2 ? m2 : m1;
  if (larger <= BigFloat::from_long(1, prec)) return BigFloat::from_long(0, prec);
  return larger.log();
}

std::vector<BigComplex> boundary_samples(const CompactSetModel& set, long count, long bits) {
  validate_set(set);
  require(count >= 2, Errc::InvariantViolation, "at least two boundary samples are required");
  require(count <= (1L << 22), Errc::InvariantViolation,
          "boundary sample count exceeds the supported range");
  std::vector<BigComplex> out;
  out.reserve(static_cast<size_t>(count) + 1);
  if (std::holds_alternative<DiskSet>(set)) {
    const DiskSet& d = std::get<DiskSet>(set);
    BigComplex radius(d.radius.round_to(bits), BigFloat::from_long(0, bits));
    for (long k = 0; k < count; ++k) {
      BigComplex dir = BigComplex::unit_from_turns(Rational(k, count), bits);
      out.push_back(d.center + radius * dir);
    }
    return out;
  }
  const SegmentSet& s = std::get<SegmentSet>(set);
  for (long k = 0; k <= count; ++k) {
    BigFloat lambda = BigFloat::from_rational(Rational(k, count), bits);
    BigComplex t(lambda, BigFloat::from_long(0, bits));
    out.push_back(s.a + (s.b - s.a) * t);
  }
  return out;
}

bool contains_point(const CompactSetModel& set, const BigComplex& z, long bits) {
  validate_set(set);
  // Membership up to a relative 2^{-20} cushion, so boundary points sampled at
  // finite precision still count as inside.
  BigFloat cushion = BigFloat::from_long(1, bits) + BigFloat::two_to(-20, bits);
  if (std::holds_alternative<DiskSet>(set)) {
    const DiskSet& d = std::get<DiskSet>(set);
    return (z - d.center).abs() <= d.radius * cushion;
  }
  const SegmentSet& s = std::get<SegmentSet>(set);
  BigComplex direction = s.b - s.a;
  BigFloat len2 = direction.re * direction.re + direction.im * direction.im;
  BigComplex rel = z - s.a;
  // Projection parameter of z onto the segment's line, clamped to [0, 1].
  BigFloat proj = (rel.re * direction.re + rel.im * direction.im) / len2;
  BigFloat zero = BigFloat::from_long(0, bits);
  BigFloat one = BigFloat::from_long(1, bits);
  if (proj < zero) proj = zero;
  if (one < proj) proj = one;
  BigComplex nearest = s.a + direction * BigComplex(proj, zero);
  BigFloat dist = (z - nearest).abs();
  return dist <= direction.abs() * BigFloat::two_to(-20, bits);
}

BigComplex evaluate_poly(const std::vector<BigComplex>& coefficients, const BigComplex& z) {
  const long prec = z.precision();
  BigComplex acc(BigFloat::from_long(0, prec), BigFloat::from_long(0, prec));
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

BernsteinReport bernstein_check(const std::vector<BigComplex>& coefficients,
                                const CompactSetModel& set,
                                const std::vector<BigComplex>& test_points,
                                long boundary_count, long bits) {
  require(bits >= BigFloat::kMinPrecision, Errc::PrecisionTooLow,
          "at least 53 bits of precision are required");
  long degree = static_cast<long>(coefficients.size()) - 1;
  while (degree >= 0 && coefficients[static_cast<size_t>(degree)].is_zero()) --degree;

  BernsteinReport report;
  report.degree = std::max(degree, 0L);
  report.boundary_count = boundary_count;
  report.test_count = static_cast<long>(test_points.size());
  report.tolerance = BigFloat::from_long(1, bits) + BigFloat::two_to(6 - bits, bits);

  BigFloat sup = BigFloat::from_long(0, bits);
  for (const BigComplex& p : boundary_samples(set, boundary_count, bits)) {
    BigFloat v = evaluate_poly(coefficients, p).abs();
    if (sup < v) sup = v;
  }
  BigFloat slack = BigFloat::from_long(1, bits) + BigFloat::two_to(-10, bits);
  report.sup_norm = sup * slack;
  report.max_ratio = BigFloat::from_long(0, bits);

  if (degree < 0 || report.sup_norm.is_zero()) {
    // Zero polynomial: every ratio is 0/0; report no violations.
    return report;
  }
  for (const BigComplex& z : test_points) {
    BigFloat value = evaluate_poly(coefficients, z).abs();
    BigFloat growth = (green_value(set, z) * BigFloat::from_long(degree, bits)).exp();
    BigFloat ratio = value / (report.sup_norm * growth);
    if (report.max_ratio < ratio) report.max_ratio = ratio;
    if (report.tolerance < ratio) ++report.violations;
  }
  return report;
}

BigFloat radius_lower_bound(const GrowthCertificate& cert, const BigComplex& t, long samples,
                            long bits) {
  require(cert.degree_factor >= 1, Errc::EmptyCertificate,
          "certificate degree factor must be >= 1");
  require(cert.rho1.is_finite() && !cert.rho1.is_negative(), Errc::EmptyCertificate,
          "certificate growth rate must be finite and nonnegative");
  require(contains_point(cert.k_set, t, bits), Errc::InvariantViolation,
          "evaluation point lies outside the certified parameter set");
  if (cert.rho1.is_zero()) return BigFloat::infinity(bits);

  // C(K) = exp(sup over K of the Green's function of C_set); the sup over a
  // disk or segment is attained on its boundary (g is subharmonic, maximum
  // principle), so boundary samples suffice.
  BigFloat sup_g = BigFloat::from_long(0, bits);
  for (const BigComplex& p : boundary_samples(cert.k_set, samples, bits)) {
    BigFloat g = green_value(cert.c_set, p);
    if (sup_g < g) sup_g = g;
  }
  BigFloat c_of_k = sup_g.exp();
  BigFloat denom = c_of_k.pow_long(cert.degree_factor) * cert.rho1;
  return (BigFloat::from_long(1, bits) / denom).round_to(bits);
}

BigFloat family_growth_rate(const ParamGerm& h_t, const CompactSetModel& c_set,
                            long samples, long bits) {
  const int n = h_t.vars();
  std::vector<BigComplex> points = boundary_samples(c_set, samples, bits);
  BigFloat rho = BigFloat::from_long(0, bits);
  const JetSpace& sp = h_t.space();
  for (int idx = sp.degree_offset(2); idx < sp.icount(); ++idx) {
    const int d = sp.degree_of(idx);
    BigFloat sup = BigFloat::from_long(0, bits);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      const ExactParamPoly& poly = h_t.component(j).coeff_internal(idx);
      if (poly.is_zero()) continue;
      nonzero = true;
      std::vector<BigComplex> coeffs;
      coeffs.reserve(poly.coefficients().size());
      for (const ExactComplex& c : poly.coefficients())
        coeffs.push_back(BigComplex::from_exact(c, bits));
      for (const BigComplex& p : points) {
        BigFloat v = evaluate_poly(coeffs, p).abs();
        if (sup < v) sup = v;
      }
    }
    if (!nonzero) continue;
    BigFloat candidate = sup.root(static_cast<unsigned long>(d));
    if (rho < candidate) rho = candidate;
  }
  return rho;
}

}  // namespace jetlin
