#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "jetlin/errors.hpp"
#include "jetlin/fixtures.hpp"
#include "jetlin/potential.hpp"
#include "test_util.hpp"

using namespace jetlin;
using namespace jetlin::testutil;

namespace {

constexpr long kBits = 128;

BigComplex bc(double re, double im = 0.0) { return BigComplex::from_doubles(re, im, kBits); }

DiskSet unit_disk() { return DiskSet{bc(0), BigFloat::from_long(1, kBits)}; }

BigFloat tol(long shift = -100) { return BigFloat::two_to(shift, 64); }

}  // namespace

TEST_CASE("green function of a disk: zero inside, log(|z - c| / r) outside") {
  CompactSetModel disk = unit_disk();
  CHECK(green_value(disk, bc(0.5, 0.25)).is_zero());
  CHECK(green_value(disk, bc(1)).is_zero());

  BigFloat at2 = green_value(disk, bc(2));
  BigFloat log2 = BigFloat::from_long(2, kBits).log();
  CHECK((at2 - log2).abs() < tol());

  // Off-center disk of radius 3: g(7 + 4i - center... ) = log(5/3) at distance 5.
  CompactSetModel wide = DiskSet{bc(1, 1), BigFloat::from_long(3, kBits)};
  BigFloat g = green_value(wide, bc(4, 5));
  BigFloat expected = (BigFloat::from_long(5, kBits) / BigFloat::from_long(3, kBits)).log();
  CHECK((g - expected).abs() < tol());
}

TEST_CASE("green function of a segment: joukowski branch of modulus >= 1") {
  CompactSetModel seg = SegmentSet{bc(-1), bc(1)};
  CHECK(green_value(seg, bc(0.3)).is_zero());
  CHECK(green_value(seg, bc(-1)).is_zero());
  CHECK(green_value(seg, bc(1)).is_zero());

  // g(2) = log(2 + sqrt(3)).
  BigFloat g2 = green_value(seg, bc(2));
  BigFloat expected = (BigFloat::from_long(2, kBits) +
                       BigFloat::from_long(3, kBits).sqrt()).log();
  CHECK((g2 - expected).abs() < tol());

  // Purely imaginary point: w = i y maps to log(y + sqrt(y^2 + 1)).
  BigFloat gi = green_value(seg, bc(0, 1));
  BigFloat exp_i = (BigFloat::from_long(1, kBits) +
                    BigFloat::from_long(2, kBits).sqrt()).log();
  CHECK((gi - exp_i).abs() < tol());

  // A segment not aligned with the axes keeps the same normal form.
  CompactSetModel diag = SegmentSet{bc(0), bc(2, 2)};
  CHECK(green_value(diag, bc(1, 1)).is_zero());
  CHECK(green_value(diag, bc(4, 4)) > BigFloat::from_long(0, 64));
}

TEST_CASE("boundary samples lie on the set boundary") {
  CompactSetModel disk = DiskSet{bc(1, 0), BigFloat::from_long(2, kBits)};
  std::vector<BigComplex> pts = boundary_samples(disk, 16, kBits);
  REQUIRE(pts.size() == 16);
  for (const BigComplex& p : pts) {
    BigFloat dist = (p - bc(1, 0)).abs();
    CHECK((dist - BigFloat::from_long(2, kBits)).abs() < tol());
    CHECK(contains_point(disk, p, kBits));
  }

  // Segments subdivide into `count` intervals, so both endpoints appear and
  // the node count is count + 1.
  CompactSetModel seg = SegmentSet{bc(-1), bc(1)};
  std::vector<BigComplex> nodes = boundary_samples(seg, 5, kBits);
  REQUIRE(nodes.size() == 6);
  CHECK((nodes.front() - bc(-1)).abs() < tol());
  CHECK((nodes.back() - bc(1)).abs() < tol());
  for (const BigComplex& p : nodes) {
    CHECK(p.im.is_zero());
    CHECK(contains_point(seg, p, kBits));
    CHECK(green_value(seg, p) < tol());
  }
}

TEST_CASE("containment test for disks and segments") {
  CompactSetModel disk = unit_disk();
  CHECK(contains_point(disk, bc(0.99), kBits));
  CHECK_FALSE(contains_point(disk, bc(1.01), kBits));

  CompactSetModel seg = SegmentSet{bc(0), bc(2, 2)};
  CHECK(contains_point(seg, bc(1, 1), kBits));
  CHECK_FALSE(contains_point(seg, bc(1, 1.001), kBits));
  CHECK_FALSE(contains_point(seg, bc(3, 3), kBits));
}

TEST_CASE("polynomial evaluation by ascending coefficients") {
  // 1 - 2 z + z^3 at z = 2i: 1 - 4i + (2i)^3 = 1 - 4i - 8i = 1 - 12i.
  std::vector<BigComplex> coeffs = {bc(1), bc(-2), bc(0), bc(1)};
  BigComplex v = evaluate_poly(coeffs, bc(0, 2));
  CHECK((v - bc(1, -12)).abs() < tol());

  CHECK((evaluate_poly({bc(7)}, bc(3, 1)) - bc(7)).abs() < tol());
  CHECK(evaluate_poly({}, bc(3)).is_zero());
}

TEST_CASE("bernstein check: z^8 on the unit disk is tight and violation-free") {
  std::vector<BigComplex> z8(9, bc(0));
  z8[8] = bc(1);
  std::vector<BigComplex> pts = {bc(2), bc(0, 3), bc(-1.5, 0.5), bc(0.5), bc(10)};
  BernsteinReport rep = bernstein_check(z8, unit_disk(), pts, 64, kBits);
  CHECK(rep.degree == 8);
  CHECK(rep.boundary_count == 64);
  CHECK(rep.test_count == 5);
  CHECK(rep.violations == 0);

  // |z^8| = 1 on the boundary, so the sampled sup-norm is exactly the slack.
  BigFloat slack = BigFloat::from_long(1, kBits) + BigFloat::two_to(-10, kBits);
  CHECK((rep.sup_norm - slack).abs() < tol());

  // At |z| = R the bound is slack * R^8, so the best ratio is 1 / slack,
  // attained at every exterior test point.
  BigFloat expected_ratio = BigFloat::from_long(1, kBits) / slack;
  CHECK((rep.max_ratio - expected_ratio).abs() < tol());
  CHECK(rep.max_ratio <= rep.tolerance);
  CHECK((rep.tolerance - (BigFloat::from_long(1, kBits) + BigFloat::two_to(6 - kBits, kBits)))
            .abs() < tol(-120));
}

TEST_CASE("bernstein check: constant polynomials have ratio 1 / slack everywhere") {
  std::vector<BigComplex> c = {bc(3, 4)};
  std::vector<BigComplex> pts = {bc(0), bc(5, 5), bc(-2)};
  BernsteinReport rep = bernstein_check(c, unit_disk(), pts, 32, kBits);
  CHECK(rep.degree == 0);
  CHECK(rep.violations == 0);
  BigFloat slack = BigFloat::from_long(1, kBits) + BigFloat::two_to(-10, kBits);
  // sup = 5 * slack; |P| = 5 everywhere; e^{0 * g} = 1.
  CHECK((rep.sup_norm - BigFloat::from_long(5, kBits) * slack).abs() < tol());
  BigFloat expected_ratio = BigFloat::from_long(1, kBits) / slack;
  CHECK((rep.max_ratio - expected_ratio).abs() < tol());
}

TEST_CASE("bernstein check: random low-degree polynomials on both set kinds") {
  RationalSource src(2026);
  CompactSetModel sets[2] = {CompactSetModel(unit_disk()),
                             CompactSetModel(SegmentSet{bc(-1), bc(1)})};
  for (const CompactSetModel& set : sets) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<BigComplex> coeffs;
      int deg = 2 + trial;
      for (int k = 0; k <= deg; ++k) {
        Rational re = src.next_rational(9);
        Rational im = src.next_rational(9);
        coeffs.push_back(BigComplex(BigFloat::from_rational(re, kBits),
                                    BigFloat::from_rational(im, kBits)));
      }
      std::vector<BigComplex> pts = {bc(1.5, 0.25), bc(-2, 1), bc(0.1), bc(3, -4)};
      BernsteinReport rep = bernstein_check(coeffs, set, pts, 256, kBits);
      CHECK(rep.violations == 0);
      CHECK(rep.max_ratio <= rep.tolerance);
    }
  }
}

TEST_CASE("radius lower bound: explicit disks give 1 / (C(K)^d * rho1)") {
  GrowthCertificate cert{unit_disk(),
                         DiskSet{bc(0), BigFloat::from_long(2, kBits)},
                         BigFloat::from_long(2, kBits), 1};
  // sup over K of g_{C}(z) = log 2 at |t| = 2, so C(K) = 2 and the bound is
  // 1 / (2 * 2) = 1/4, uniformly over t in K.
  BigFloat r = radius_lower_bound(cert, bc(0.5), 64, kBits);
  CHECK((r - BigFloat::from_rational(Rational(1, 4), kBits)).abs() < tol(-90));
  BigFloat r_edge = radius_lower_bound(cert, bc(0, 2), 64, kBits);
  CHECK((r_edge - r).abs() < tol(-90));

  // t outside K is a caller error.
  CHECK_THROWS_AS(radius_lower_bound(cert, bc(3), 64, kBits), Error);

  // C_set == K: C(K) = 1, so the radius is 1 / rho1.
  GrowthCertificate same{unit_disk(), unit_disk(), BigFloat::from_long(2, kBits), 3};
  BigFloat r_same = radius_lower_bound(same, bc(0.5), 64, kBits);
  CHECK((r_same - BigFloat::from_rational(Rational(1, 2), kBits)).abs() < tol(-90));

  // rho1 = 0 yields an infinite radius.
  GrowthCertificate zero{unit_disk(), unit_disk(), BigFloat::from_long(0, kBits), 1};
  CHECK(radius_lower_bound(zero, bc(0.5), 64, kBits).is_inf());

  // Larger degree factor shrinks the radius: d = 2 gives 1 / (4 * 2) = 1/8.
  GrowthCertificate d2{unit_disk(),
                       DiskSet{bc(0), BigFloat::from_long(2, kBits)},
                       BigFloat::from_long(2, kBits), 2};
  BigFloat r2 = radius_lower_bound(d2, bc(1, 0), 64, kBits);
  CHECK((r2 - BigFloat::from_rational(Rational(1, 8), kBits)).abs() < tol(-90));
}

TEST_CASE("family growth rate: max of sampled sup-norms to the power 1/|i|") {
  // h_t with a single degree-2 slice t z^2: sup over the unit disk of |t| is 1,
  // so rho1 = 1^{1/2} = 1.
  auto sp = jet_space(1, 4);
  ParamGerm h = ParamGerm::identity(sp);
  ExactParamPoly t = ExactParamPoly::monomial(ExactComplex::one(), 1);
  h = h + ParamGerm::monomial_slice(sp, MultiIndex({2}), 0, t);
  BigFloat rho = family_growth_rate(h, unit_disk(), 128, kBits);
  CHECK((rho - BigFloat::from_long(1, kBits)).abs() < tol(-20));

  // Scaling the slice to 8 t z^2 lifts rho1 to sqrt(8) = 2 sqrt(2).
  ParamGerm h8 = ParamGerm::identity(sp);
  h8 = h8 + ParamGerm::monomial_slice(sp, MultiIndex({2}), 0,
                                      ExactParamPoly::monomial(ec(8), 1));
  BigFloat rho8 = family_growth_rate(h8, unit_disk(), 128, kBits);
  CHECK((rho8 - BigFloat::from_long(8, kBits).sqrt()).abs() < tol(-20));

  // A degree-3 constant slice c z^3 contributes |c|^{1/3}: with c = 27 the
  // degree-2 part above still wins only if sqrt(8) > 3; it does not, so the
  // rate becomes 3.
  ParamGerm mix = h8 + ParamGerm::monomial_slice(sp, MultiIndex({3}), 0,
                                                 ExactParamPoly(ec(27)));
  BigFloat rho_mix = family_growth_rate(mix, unit_disk(), 128, kBits);
  CHECK((rho_mix - BigFloat::from_long(3, kBits)).abs() < tol(-20));

  // The identity family has no stored monomials of degree >= 2: rho1 = 0 and
  // the certificate radius is infinite.
  BigFloat rho_id = family_growth_rate(ParamGerm::identity(sp), unit_disk(), 64, kBits);
  CHECK(rho_id.is_zero());
}
