#pragma once

// Shared builders for the test suites: compact constructors for exact
// scalars, matrices, and germs so test bodies read close to the math.

#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "jetlin/jets.hpp"
#include "jetlin/linalg.hpp"
#include "jetlin/rings.hpp"

namespace jetlin::testutil {

inline ExactComplex ec(long x) { return ExactComplex(x); }
inline ExactComplex ecq(long num, long den) {
  return ExactComplex(Rational(num, den), Rational(0));
}
inline ExactComplex eci(long re, long im) {
  return ExactComplex(Rational(re), Rational(im));
}

inline Matrix<ExactComplex> diag2(ExactComplex a, ExactComplex b) {
  Matrix<ExactComplex> m(2, 2);
  m.at(0, 0) = std::move(a);
  m.at(1, 1) = std::move(b);
  return m;
}

inline Matrix<ExactComplex> diag3(ExactComplex a, ExactComplex b, ExactComplex c) {
  Matrix<ExactComplex> m(3, 3);
  m.at(0, 0) = std::move(a);
  m.at(1, 1) = std::move(b);
  m.at(2, 2) = std::move(c);
  return m;
}

inline Matrix<ExactComplex> jordan2() {
  Matrix<ExactComplex> m = Matrix<ExactComplex>::identity(2);
  m.at(0, 1) = ExactComplex::one();
  return m;
}

struct Term {
  int coordinate;            // 0-based
  std::vector<int> exponents;
  ExactComplex value;
};

// Germ with the given linear part plus explicit higher-order terms.
inline ExactGerm germ_with(std::shared_ptr<const JetSpace> space,
                           const Matrix<ExactComplex>& linear,
                           std::initializer_list<Term> terms) {
  ExactGerm g = ExactGerm::from_linear(space, linear);
  for (const Term& t : terms) {
    g = g + ExactGerm::monomial_slice(space, MultiIndex(t.exponents), t.coordinate, t.value);
  }
  return g;
}

inline ExactGerm tangent_identity(std::shared_ptr<const JetSpace> space,
                                  std::initializer_list<Term> terms) {
  return germ_with(space, Matrix<ExactComplex>::identity(space->vars()), terms);
}

// One-variable germ lambda*z + sum of higher terms, coefficients by degree.
inline ExactGerm scalar_germ(std::shared_ptr<const JetSpace> space, ExactComplex lambda,
                             std::initializer_list<std::pair<int, ExactComplex>> higher) {
  Matrix<ExactComplex> lin(1, 1);
  lin.at(0, 0) = std::move(lambda);
  ExactGerm g = ExactGerm::from_linear(space, lin);
  for (const auto& [deg, value] : higher) {
    g = g + ExactGerm::monomial_slice(space, MultiIndex({deg}), 0, value);
  }
  return g;
}

}  // namespace jetlin::testutil
