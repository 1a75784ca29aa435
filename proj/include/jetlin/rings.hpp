#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetlin/errors.hpp"

namespace jetlin {

using Rational = mpq_class;
using Integer = mpz_class;

// Parse "p", "-p" or "p/q" into a canonical rational.  Rejects q == 0 and
// anything that is not a plain base-10 integer pair.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

// ---------------------------------------------------------------------------
// ExactComplex: a + bi with rational a, b.  Field operations are exact.
// ---------------------------------------------------------------------------

struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit ExactComplex(long r) : re(r), im(0) {}

  static ExactComplex zero() { return ExactComplex(); }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  ExactComplex conj() const { return ExactComplex(re, -im); }
  // |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  ExactComplex operator-() const { return ExactComplex(-re, -im); }
  ExactComplex operator+(const ExactComplex& o) const {
    return ExactComplex(re + o.re, im + o.im);
  }
  ExactComplex operator-(const ExactComplex& o) const {
    return ExactComplex(re - o.re, im - o.im);
  }
  ExactComplex operator*(const ExactComplex& o) const {
    return ExactComplex(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  ExactComplex inverse() const;
  ExactComplex operator/(const ExactComplex& o) const { return *this * o.inverse(); }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

  bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }
  bool operator!=(const ExactComplex& o) const { return !(*this == o); }

  // z^k for any integer k (negative k inverts first).
  ExactComplex pow(long k) const;

  // True iff z is a root of unity.  Over the Gaussian rationals the only
  // roots of unity are 1, -1, i, -i, so this doubles as an exact membership
  // test; order() gives the multiplicative order (1, 2 or 4) for those.
  bool is_root_of_unity() const;
  long root_of_unity_order() const;

  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// BigFloat: RAII wrapper around one mpfr_t.  Precision is per-value, never
// below 53 bits; binary operations round at the larger of the two operand
// precisions.  All rounding is to nearest.
// ---------------------------------------------------------------------------

class BigFloat {
 public:
  static constexpr long kMinPrecision = 53;

  explicit BigFloat(long precision = kMinPrecision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_double(double x, long precision = kMinPrecision);
  static BigFloat from_long(long x, long precision = kMinPrecision);
  static BigFloat from_rational(const Rational& q, long precision);
  static BigFloat from_string(const std::string& text, long precision);
  static BigFloat from_integer(const Integer& z, long precision);
  // 2^e, exact.
  static BigFloat two_to(long e, long precision = kMinPrecision);
  static BigFloat pi(long precision);
  static BigFloat infinity(long precision = kMinPrecision);

  long precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat operator-() const;
  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  // Division by an exact zero raises DivisionByZero.
  BigFloat operator/(const BigFloat& o) const;

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

  int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return compare(o) < 0; }
  bool operator<=(const BigFloat& o) const { return compare(o) <= 0; }
  bool operator>(const BigFloat& o) const { return compare(o) > 0; }
  bool operator>=(const BigFloat& o) const { return compare(o) >= 0; }
  // Exact value equality (not bit equality): 1.0 at 53 bits == 1.0 at 256.
  bool operator==(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
  bool operator!=(const BigFloat& o) const { return !(*this == o); }

  BigFloat abs() const;
  BigFloat sqrt() const;   // negative argument -> NaN, caller beware
  BigFloat log() const;    // natural log
  BigFloat exp() const;
  BigFloat sin() const;
  BigFloat cos() const;
  BigFloat pow_long(long k) const;
  // x^(1/k) for x >= 0, k >= 1.
  BigFloat root(unsigned long k) const;
  BigFloat floor() const;
  Integer to_integer_floor() const;
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  // Binary exponent e with 2^{e-1} <= |x| < 2^e; 0 for zero/inf/nan.
  long exponent() const { return (is_zero() || !is_finite()) ? 0 : mpfr_get_exp(v_); }

  // Value copied to a different precision (rounded if narrower).
  BigFloat round_to(long precision) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string that mpfr can parse back; enough digits for the precision.
  std::string to_string() const;

  // Raw handle for the few call sites that need an mpfr function directly.
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  static long combined_precision(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
  }

 private:
  mpfr_t v_;
};

BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

// ---------------------------------------------------------------------------
// BigComplex: pair of BigFloats.
// ---------------------------------------------------------------------------

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(long precision = BigFloat::kMinPrecision)
      : re(precision), im(precision) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex from_exact(const ExactComplex& z, long precision);
  static BigComplex from_doubles(double r, double i,
                                 long precision = BigFloat::kMinPrecision);
  // exp(2*pi*i*turns), computed with guard bits and rounded to `precision`.
  static BigComplex unit_from_turns(const BigFloat& turns, long precision);
  static BigComplex unit_from_turns(const Rational& turns, long precision);

  long precision() const { return std::max(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex conj() const { return BigComplex(re, -im); }
  BigFloat abs() const;

  BigComplex operator-() const { return BigComplex(-re, -im); }
  BigComplex operator+(const BigComplex& o) const {
    return BigComplex(re + o.re, im + o.im);
  }
  BigComplex operator-(const BigComplex& o) const {
    return BigComplex(re - o.re, im - o.im);
  }
  BigComplex operator*(const BigComplex& o) const {
    return BigComplex(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  BigComplex operator/(const BigComplex& o) const;
  BigComplex inverse() const;

  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  // Exact float equality, used by tests and by is_zero-style guards.
  bool operator==(const BigComplex& o) const { return re == o.re && im == o.im; }
  bool operator!=(const BigComplex& o) const { return !(*this == o); }

  BigComplex pow(long k) const;
  // Principal square root (branch cut on the negative real axis).
  BigComplex sqrt() const;

  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// ParamPoly<T>: univariate polynomials in a formal parameter t with
// coefficients in T.  This is the coefficient ring for one-parameter germ
// families.  Degree of the zero polynomial is -1.
// ---------------------------------------------------------------------------

template <class T>
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(T constant) {
    c_.push_back(std::move(constant));
    strip();
  }

  static ParamPoly constant(T value) { return ParamPoly(std::move(value)); }
  // c * t^k
  static ParamPoly monomial(T value, int k) {
    ParamPoly p;
    p.c_.assign(static_cast<size_t>(k) + 1, T{});
    p.c_[static_cast<size_t>(k)] = std::move(value);
    p.strip();
    return p;
  }
  static ParamPoly from_coefficients(std::vector<T> coeffs) {
    ParamPoly p;
    p.c_ = std::move(coeffs);
    p.strip();
    return p;
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of t^k (zero when k exceeds the stored degree).
  T coefficient(size_t k) const { return k < c_.size() ? c_[k] : T{}; }
  const std::vector<T>& coefficients() const { return c_; }

  ParamPoly operator-() const {
    ParamPoly r;
    r.c_.reserve(c_.size());
    for (const T& x : c_) r.c_.push_back(-x);
    return r;
  }

  ParamPoly operator+(const ParamPoly& o) const {
    ParamPoly r;
    size_t nmax = std::max(c_.size(), o.c_.size());
    r.c_.reserve(nmax);
    for (size_t k = 0; k < nmax; ++k) r.c_.push_back(coefficient(k) + o.coefficient(k));
    r.strip();
    return r;
  }

  ParamPoly operator-(const ParamPoly& o) const { return *this + (-o); }

  ParamPoly operator*(const ParamPoly& o) const {
    ParamPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, T{});
    for (size_t a = 0; a < c_.size(); ++a) {
      if (detail_is_zero(c_[a])) continue;
      for (size_t b = 0; b < o.c_.size(); ++b) {
        r.c_[a + b] += c_[a] * o.c_[b];
      }
    }
    r.strip();
    return r;
  }

  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  bool operator==(const ParamPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t k = 0; k < c_.size(); ++k)
      if (!(c_[k] == o.c_[k])) return false;
    return true;
  }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  // Evaluate at a point of ring S through a coefficient embedding.
  template <class S, class Embed>
  S evaluate(const S& t, Embed&& embed) const {
    S acc = S{};
    for (size_t k = c_.size(); k-- > 0;) {
      acc = acc * t + embed(c_[k]);
    }
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (detail_is_zero(c_[k])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].to_string() + ")";
      if (k == 1) out += "*t";
      if (k > 1) out += "*t^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static bool detail_is_zero(const T& x) { return x.is_zero(); }

  void strip() {
    while (!c_.empty() && detail_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;  // c_[k] multiplies t^k; invariant: back() != 0
};

using ExactParamPoly = ParamPoly<ExactComplex>;

// ---------------------------------------------------------------------------
// Ring trait hooks used by the generic jet / matrix machinery.
// ---------------------------------------------------------------------------

inline bool ring_is_zero(const ExactComplex& x) { return x.is_zero(); }
inline bool ring_is_zero(const BigComplex& x) { return x.is_zero(); }
template <class T>
bool ring_is_zero(const ParamPoly<T>& x) {
  return x.is_zero();
}

inline std::optional<ExactComplex> ring_try_invert(const ExactComplex& x) {
  if (x.is_zero()) return std::nullopt;
  return x.inverse();
}
inline std::optional<BigComplex> ring_try_invert(const BigComplex& x) {
  if (x.is_zero()) return std::nullopt;
  return x.inverse();
}
// A parameter polynomial is a unit only when it is a nonzero constant whose
// value is itself invertible.
template <class T>
std::optional<ParamPoly<T>> ring_try_invert(const ParamPoly<T>& x) {
  if (!x.is_constant() || x.is_zero()) return std::nullopt;
  auto inv = ring_try_invert(x.coefficient(0));
  if (!inv) return std::nullopt;
  return ParamPoly<T>::constant(*inv);
}

template <class T>
T ring_one();
template <>
inline ExactComplex ring_one<ExactComplex>() {
  return ExactComplex::one();
}
template <>
inline BigComplex ring_one<BigComplex>() {
  return BigComplex::from_doubles(1.0, 0.0);
}
template <>
inline ExactParamPoly ring_one<ExactParamPoly>() {
  return ExactParamPoly::constant(ExactComplex::one());
}

template <class T>
T ring_from_long(long k) {
  T acc{};
  T one = ring_one<T>();
  bool neg = k < 0;
  unsigned long mag = neg ? (unsigned long)(-(k + 1)) + 1ul : (unsigned long)k;
  for (unsigned long j = 0; j < mag; ++j) acc += one;
  if (neg) acc = T{} - acc;
  return acc;
}

template <>
inline ExactComplex ring_from_long<ExactComplex>(long k) {
  return ExactComplex(k);
}
template <>
inline ExactParamPoly ring_from_long<ExactParamPoly>(long k) {
  return ExactParamPoly::constant(ExactComplex(k));
}

}  // namespace jetlin
