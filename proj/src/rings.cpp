#include "jetlin/rings.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>

namespace jetlin {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t k = 0;
  if (s[0] == '-' || s[0] == '+') k = 1;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  require(is_plain_integer(num) && is_plain_integer(den), Errc::ParseError,
          "not a rational literal: '" + text + "'");
  Integer n(num), d(den);
  require(sgn(d) != 0, Errc::ParseError, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ----------------------------------------------------------------- exact ---

ExactComplex ExactComplex::inverse() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of exact zero");
  Rational n = norm2();
  return ExactComplex(re / n, -im / n);
}

ExactComplex ExactComplex::pow(long k) const {
  ExactComplex base = *this;
  unsigned long mag;
  if (k < 0) {
    base = inverse();
    mag = static_cast<unsigned long>(-(k + 1)) + 1ul;
  } else {
    mag = static_cast<unsigned long>(k);
  }
  ExactComplex acc = ExactComplex::one();
  while (mag) {
    if (mag & 1ul) acc *= base;
    base *= base;
    mag >>= 1;
  }
  return acc;
}

bool ExactComplex::is_root_of_unity() const {
  // In Q(i) the unit circle's torsion subgroup is exactly {1, -1, i, -i}.
  if (sgn(im) == 0) return re == 1 || re == -1;
  if (sgn(re) == 0) return im == 1 || im == -1;
  return false;
}

long ExactComplex::root_of_unity_order() const {
  require(is_root_of_unity(), Errc::SpectrumUnsupported,
          "eigenvalue is not a root of unity in the exact ring: " + to_string());
  if (re == 1) return 1;
  if (re == -1) return 2;
  return 4;  // +-i
}

std::string ExactComplex::to_string() const {
  if (sgn(im) == 0) return rational_to_string(re);
  std::string out = rational_to_string(re);
  out += (sgn(im) < 0) ? " - " : " + ";
  Rational a = abs(im);
  out += rational_to_string(a) + "i";
  return out;
}

// -------------------------------------------------------------- bigfloat ---

namespace {
long clamp_precision(long precision) {
  require(precision >= BigFloat::kMinPrecision, Errc::PrecisionTooLow,
          "working precision below " + std::to_string(BigFloat::kMinPrecision) +
              " bits: " + std::to_string(precision));
  require(precision <= (1l << 24), Errc::InvariantViolation,
          "working precision implausibly large");
  return precision;
}
}  // namespace

BigFloat::BigFloat(long precision) { mpfr_init2(v_, clamp_precision(precision)); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_double(double x, long precision) {
  BigFloat r(precision);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_long(long x, long precision) {
  BigFloat r(precision);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_rational(const Rational& q, long precision) {
  BigFloat r(precision);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_integer(const Integer& z, long precision) {
  BigFloat r(precision);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& text, long precision) {
  BigFloat r(precision);
  int rc = mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN);
  require(rc == 0, Errc::ParseError, "not a decimal float literal: '" + text + "'");
  return r;
}

BigFloat BigFloat::two_to(long e, long precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.v_, 1u, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(long precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::infinity(long precision) {
  BigFloat r(precision);
  mpfr_set_inf(r.v_, 1);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
  BigFloat r(combined_precision(*this, o));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
  BigFloat r(combined_precision(*this, o));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
  BigFloat r(combined_precision(*this, o));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  require(!o.is_zero(), Errc::DivisionByZero, "bigfloat division by exact zero");
  BigFloat r(combined_precision(*this, o));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  BigFloat r(precision());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sin() const {
  BigFloat r(precision());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::cos() const {
  BigFloat r(precision());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_long(long k) const {
  BigFloat r(precision());
  mpfr_pow_si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::root(unsigned long k) const {
  BigFloat r(precision());
#if defined(mpfr_rootn_ui) || MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
#else
  mpfr_root(r.v_, v_, k, MPFR_RNDN);
#endif
  return r;
}

BigFloat BigFloat::floor() const {
  BigFloat r(precision());
  mpfr_floor(r.v_, v_);
  return r;
}

Integer BigFloat::to_integer_floor() const {
  Integer z;
  BigFloat f = floor();
  mpfr_get_z(z.get_mpz_t(), f.v_, MPFR_RNDZ);
  return z;
}

BigFloat BigFloat::round_to(long precision) const {
  BigFloat r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  // Enough decimal digits to round-trip at this precision.
  size_t digits = static_cast<size_t>(mpfr_get_prec(v_) * 0.3010299957) + 3;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string body = neg ? mant.substr(1) : mant;
  // mpfr places the decimal point before the first digit; exponent e is in
  // decimal digits.  Emit d.ddd...e<k> with k = e - 1.
  std::string out = neg ? "-" : "";
  out += body.substr(0, 1);
  // Trim trailing zeros of the fraction for readability.
  std::string frac = body.substr(1);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

// ------------------------------------------------------------ bigcomplex ---

BigComplex BigComplex::from_exact(const ExactComplex& z, long precision) {
  return BigComplex(BigFloat::from_rational(z.re, precision),
                    BigFloat::from_rational(z.im, precision));
}

BigComplex BigComplex::from_doubles(double r, double i, long precision) {
  return BigComplex(BigFloat::from_double(r, precision),
                    BigFloat::from_double(i, precision));
}

BigComplex BigComplex::unit_from_turns(const BigFloat& turns, long precision) {
  long work = std::max(precision, turns.precision()) + 32;
  BigFloat angle = BigFloat::pi(work) * BigFloat::from_long(2, work) * turns.round_to(work);
  return BigComplex(angle.cos().round_to(precision), angle.sin().round_to(precision));
}

BigComplex BigComplex::unit_from_turns(const Rational& turns, long precision) {
  return unit_from_turns(BigFloat::from_rational(turns, precision + 32), precision);
}

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::inverse() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of bigfloat zero");
  BigFloat n = re * re + im * im;
  return BigComplex(re / n, -(im / n));
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
  return *this * o.inverse();
}

BigComplex BigComplex::pow(long k) const {
  BigComplex base = *this;
  unsigned long mag;
  if (k < 0) {
    base = inverse();
    mag = static_cast<unsigned long>(-(k + 1)) + 1ul;
  } else {
    mag = static_cast<unsigned long>(k);
  }
  BigComplex acc = BigComplex::from_doubles(1.0, 0.0, precision());
  while (mag) {
    if (mag & 1ul) acc *= base;
    base *= base;
    mag >>= 1;
  }
  return acc;
}

BigComplex BigComplex::sqrt() const {
  // Principal branch: re(sqrt) = sqrt((|z| + re)/2) >= 0,
  // im(sqrt) = sign(im) * sqrt((|z| - re)/2).
  const long prec = precision();
  BigFloat r = abs();
  BigFloat two = BigFloat::from_long(2, prec);
  BigFloat sr = ((r + re) / two).abs().sqrt();
  BigFloat si = ((r - re) / two).abs().sqrt();
  if (im.is_negative()) si = -si;
  return BigComplex(std::move(sr), std::move(si));
}

std::string BigComplex::to_string() const {
  return re.to_string() + (im.is_negative() ? " - " : " + ") + im.abs().to_string() + "i";
}

}  // namespace jetlin
