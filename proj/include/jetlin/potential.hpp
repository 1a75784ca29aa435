#pragma once

#include <variant>
#include <vector>

#include "jetlin/jets.hpp"
#include "jetlin/rings.hpp"

namespace jetlin {

// Compact sets in the plane with elementary Green's functions (pole at
// infinity).  Disk: g(z) = max(0, log(|z - c| / r)).  Segment [a, b]:
// g(z) = max(0, log |w + sqrt(w^2 - 1)|) with w = (2z - a - b)/(b - a), taking
// the branch of modulus >= 1.
struct DiskSet {
  BigComplex center;
  BigFloat radius;
};
struct SegmentSet {
  BigComplex a;
  BigComplex b;
};
using CompactSetModel = std::variant<DiskSet, SegmentSet>;

BigFloat green_value(const CompactSetModel& set, const BigComplex& z);

// Points on the outer boundary: count equally spaced points (disk: roots of
// unity scaled; segment: equally spaced nodes including both endpoints).
std::vector<BigComplex> boundary_samples(const CompactSetModel& set, long count, long bits);
bool contains_point(const CompactSetModel& set, const BigComplex& z, long bits);

// Growth comparison |P(z)| <= sup_E |P| * e^{deg(P) * g_E(z)} for a polynomial
// P given by ascending coefficients.  The sup-norm is estimated from boundary
// samples, inflated by the slack factor 1 + 2^{-10}; a test point violates the
// bound when its ratio exceeds 1 + 2^{6-bits}.
struct BernsteinReport {
  long degree = 0;
  long boundary_count = 0;
  long test_count = 0;
  BigFloat sup_norm;     // slack-inflated sampled sup-norm
  BigFloat max_ratio;    // max |P(z)| / (sup_norm * e^{deg * g(z)})
  BigFloat tolerance;    // 1 + 2^{6-bits} threshold applied to the ratio
  long violations = 0;
};

BernsteinReport bernstein_check(const std::vector<BigComplex>& coefficients,
                                const CompactSetModel& set,
                                const std::vector<BigComplex>& test_points,
                                long boundary_count, long bits);

// Growth certificate for a coefficient family: coefficient norms obey
// ||h_i(t)|| <= (C(K)^d * rho1)^{|i|} for t in K, where
// C(K) = exp(sup_K g_{C_set}) and rho1 is the certified first-order growth
// rate on C_set.  radius_lower_bound returns 1 / (C(K)^d * rho1): a series
// whose coefficients obey the certificate converges at least on that radius
// at any t in K (t is validated, the bound itself is uniform over K).
// rho1 = 0 gives +inf.
struct GrowthCertificate {
  CompactSetModel c_set;
  CompactSetModel k_set;
  BigFloat rho1;
  long degree_factor = 1;  // d
};

BigFloat radius_lower_bound(const GrowthCertificate& cert, const BigComplex& t, long samples,
                            long bits);

// Certified rho1 for a polynomial-coefficient family: the max over stored
// monomials i (|i| >= 2) of (sup-norm over sampled C_set of the coefficient
// vector in the max norm)^{1/|i|}.
BigFloat family_growth_rate(const ParamGerm& h_t, const CompactSetModel& c_set,
                            long samples, long bits);

// |P(z)| for an ascending-coefficient polynomial over BigComplex.
BigComplex evaluate_poly(const std::vector<BigComplex>& coefficients, const BigComplex& z);

}  // namespace jetlin
