#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetlin/errors.hpp"
#include "jetlin/rings.hpp"
#include "test_util.hpp"

using namespace jetlin;
using namespace jetlin::testutil;

TEST_CASE("rational parsing accepts fractions and integers, canonicalized") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
  CHECK(rational_to_string(Rational(5)) == "5");
}

TEST_CASE("rational parsing rejects malformed text and zero denominators") {
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("gaussian rational arithmetic is exact") {
  ExactComplex a = eci(1, 2);
  ExactComplex b = eci(3, -1);
  CHECK(a * b == eci(5, 5));
  CHECK(a + b == eci(4, 1));
  CHECK(a - b == eci(-2, 3));
  CHECK(a.conj() == eci(1, -2));
  CHECK(a.norm2() == Rational(5));

  ExactComplex inv = a.inverse();
  CHECK(a * inv == ExactComplex::one());
  CHECK(inv == ExactComplex(Rational(1, 5), Rational(-2, 5)));
  CHECK_THROWS_AS(ExactComplex::zero().inverse(), Error);
}

TEST_CASE("gaussian rational powers, including negative exponents") {
  ExactComplex i = ExactComplex::i();
  CHECK(i.pow(2) == ec(-1));
  CHECK(i.pow(-1) == eci(0, -1));
  CHECK(i.pow(0) == ExactComplex::one());
  CHECK(ec(2).pow(10) == ec(1024));
  CHECK(ec(2).pow(-2) == ecq(1, 4));
}

TEST_CASE("roots of unity in the gaussian rationals are exactly {1,-1,i,-i}") {
  CHECK(ExactComplex::one().is_root_of_unity());
  CHECK(ExactComplex::one().root_of_unity_order() == 1);
  CHECK(ec(-1).root_of_unity_order() == 2);
  CHECK(ExactComplex::i().root_of_unity_order() == 4);
  CHECK(eci(0, -1).root_of_unity_order() == 4);
  CHECK_FALSE(ec(2).is_root_of_unity());
  // Unit modulus alone is not enough: (3/5 + 4/5 i) has |z| = 1 but infinite
  // multiplicative order.
  ExactComplex z(Rational(3, 5), Rational(4, 5));
  CHECK(z.norm2() == Rational(1));
  CHECK_FALSE(z.is_root_of_unity());
}

TEST_CASE("bigfloat precision floor and max-operand propagation") {
  BigFloat a = BigFloat::from_long(1, 64);
  BigFloat b = BigFloat::from_long(1, 128);
  CHECK(a.precision() == 64);
  CHECK((a + b).precision() == 128);
  CHECK((a * b).precision() == 128);
  // The 53-bit floor is enforced, not silently clamped.
  CHECK_THROWS_AS(BigFloat(10), Error);
  CHECK(BigFloat().precision() == BigFloat::kMinPrecision);
}

TEST_CASE("bigfloat equality is value equality across precisions") {
  CHECK(BigFloat::from_long(1, 53) == BigFloat::from_long(1, 256));
  CHECK(BigFloat::two_to(-10, 64) == BigFloat::two_to(-10, 200));
  CHECK(BigFloat::from_long(1, 53) != BigFloat::from_long(2, 53));
}

TEST_CASE("bigfloat exact constructors and special values") {
  CHECK(BigFloat::two_to(3, 53).to_double() == doctest::Approx(8.0));
  CHECK(BigFloat::two_to(-3, 53).to_double() == doctest::Approx(0.125));
  CHECK(BigFloat::from_rational(Rational(1, 4), 64) == BigFloat::two_to(-2, 64));
  CHECK(BigFloat::infinity(64).is_inf());
  CHECK_FALSE(BigFloat::infinity(64).is_finite());
  BigFloat pi = BigFloat::pi(128);
  CHECK(pi.to_double() == doctest::Approx(3.14159265358979));
  CHECK_THROWS_AS(BigFloat::from_long(1, 64) / BigFloat::from_long(0, 64), Error);
}

TEST_CASE("bigfloat exponent matches the binary magnitude convention") {
  CHECK(BigFloat::from_long(1, 53).exponent() == 1);   // 1 = 0.5 * 2^1
  CHECK(BigFloat::from_long(8, 53).exponent() == 4);
  CHECK(BigFloat::two_to(-20, 53).exponent() == -19);
  CHECK(BigFloat::from_long(0, 53).exponent() == 0);
}

TEST_CASE("bigfloat round_to narrows and widens without changing exact values") {
  BigFloat x = BigFloat::from_long(3, 256) / BigFloat::from_long(7, 256);
  BigFloat narrowed = x.round_to(64);
  CHECK(narrowed.precision() == 64);
  CHECK((x - narrowed).abs() < BigFloat::two_to(-60, 64));
  CHECK(BigFloat::from_long(5, 53).round_to(300) == BigFloat::from_long(5, 53));
}

TEST_CASE("bigcomplex arithmetic and modulus") {
  BigComplex z = BigComplex::from_doubles(3, 4, 128);
  CHECK(z.abs() == BigFloat::from_long(5, 128));
  BigComplex w = z * z.conj();
  CHECK(w.re == BigFloat::from_long(25, 128));
  CHECK(w.im.is_zero());
  CHECK((z / z - BigComplex::from_doubles(1, 0, 128)).abs() < BigFloat::two_to(-120, 64));
}

TEST_CASE("bigcomplex unit_from_turns lands on the unit circle") {
  BigComplex i = BigComplex::unit_from_turns(Rational(1, 4), 256);
  CHECK(i.re.abs() < BigFloat::two_to(-250, 64));
  CHECK((i.im - BigFloat::from_long(1, 256)).abs() < BigFloat::two_to(-250, 64));
  BigComplex back = BigComplex::unit_from_turns(Rational(1, 3), 256).pow(3);
  CHECK((back - BigComplex::from_doubles(1, 0, 256)).abs() < BigFloat::two_to(-245, 64));
}

TEST_CASE("parameter polynomials strip trailing zeros; zero has degree -1") {
  ExactParamPoly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());
  ExactParamPoly p = ExactParamPoly::from_coefficients({ec(1), ec(0), ec(0)});
  CHECK(p.degree() == 0);
  ExactParamPoly t = ExactParamPoly::monomial(ExactComplex::one(), 1);
  CHECK(t.degree() == 1);
  CHECK((t - t).degree() == -1);
}

TEST_CASE("parameter polynomial ring laws") {
  ExactParamPoly t = ExactParamPoly::monomial(ExactComplex::one(), 1);
  ExactParamPoly p = ExactParamPoly::constant(ec(2)) + t;        // 2 + t
  ExactParamPoly q = ExactParamPoly::constant(ec(-1)) + t * t;   // t^2 - 1
  CHECK((p * q).degree() == 3);
  CHECK(p * q == q * p);
  CHECK(p * (q + t) == p * q + p * t);
  CHECK((p - p).is_zero());
  CHECK(p.coefficient(0) == ec(2));
  CHECK(p.coefficient(1) == ec(1));
  CHECK(p.coefficient(5) == ExactComplex::zero());
}

TEST_CASE("parameter polynomial evaluation is Horner over the target ring") {
  // p(t) = 1 - t/2 evaluated at exact complex t = 2i.
  ExactParamPoly p = ExactParamPoly::from_coefficients({ec(1), ecq(-1, 2)});
  ExactComplex at = p.evaluate(eci(0, 2), [](const ExactComplex& c) { return c; });
  CHECK(at == eci(1, -1));

  BigComplex tb = BigComplex::from_doubles(2, 0, 128);
  BigComplex vb = p.evaluate(tb, [](const ExactComplex& c) {
    return BigComplex::from_exact(c, 128);
  });
  CHECK(vb.re.is_zero());
  CHECK(vb.im.is_zero());
}

TEST_CASE("ring helpers agree across coefficient rings") {
  CHECK(ring_one<ExactComplex>() == ec(1));
  CHECK(ring_from_long<ExactComplex>(-3) == ec(-3));
  CHECK(ring_one<ExactParamPoly>() == ExactParamPoly::constant(ec(1)));
  CHECK(ring_is_zero(ExactParamPoly{}));
  CHECK_FALSE(ring_is_zero(ring_one<BigComplex>()));
  CHECK_FALSE(ring_try_invert(ExactComplex::zero()).has_value());
  CHECK(ring_try_invert(ec(4)).value() == ecq(1, 4));
  // A parameter polynomial is invertible in the ring only if it is a nonzero
  // constant.
  ExactParamPoly t = ExactParamPoly::monomial(ExactComplex::one(), 1);
  CHECK_FALSE(ring_try_invert(t).has_value());
  CHECK(ring_try_invert(ExactParamPoly::constant(ec(2))).value() ==
        ExactParamPoly::constant(ecq(1, 2)));
}
