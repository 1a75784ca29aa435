#pragma once

#include <vector>

#include "jetlin/jets.hpp"
#include "jetlin/linalg.hpp"
#include "jetlin/rings.hpp"
#include "jetlin/spectrum.hpp"

namespace jetlin {

// Matrix of the homological operator u -> u o A - A o u restricted to homogeneous
// vector-valued polynomials of the given degree.  Rows and columns are indexed by
// slots (local graded-lex monomial rank * n + coordinate); for diagonal A the matrix
// is diagonal with entries lambda^i - lambda_j.
struct HomologicalMatrix {
  int degree = 0;
  Matrix<ExactComplex> matrix;
};
HomologicalMatrix homological_matrix(const Matrix<ExactComplex>& linear, int degree);

// Matrix of the scalar substitution-difference operator phi -> phi(A z) - phi(z) on
// homogeneous scalar polynomials of the given degree, indexed by local graded-lex rank.
// For the unipotent 2x2 Jordan block this is strictly lower triangular with binomial
// entries C(n - c, r - c).
Matrix<ExactComplex> shift_difference_matrix(const Matrix<ExactComplex>& linear, int degree);

// Exact kernel of the homological operator degree by degree: the tangent-to-identity
// jets commuting with the linear map, as germs of the requested order.  Basis elements
// are sorted by (degree, graded-lex rank, coordinate) of their defining free slot.
struct CentralizerBasis {
  int order = 0;
  int delta = 0;  // == basis.size()
  std::vector<ExactGerm> basis;
  std::vector<ResonantPair> slots;  // the free slot that generated each basis element
};
CentralizerBasis centralizer_basis(const Matrix<ExactComplex>& linear, int order);

// psi_A(s): identity plus the s-weighted combination of the centralizer basis
// nonlinear parts.  |s| must equal delta(A, order).
ExactGerm centralizer_combination(const Matrix<ExactComplex>& linear, int order,
                                  const std::vector<ExactComplex>& s);

// Exact jet-level commutation test: pi_m(h o A) == pi_m(A o h) at h's order.
bool verify_commute(const ExactGerm& h, const Matrix<ExactComplex>& linear);

// Closed-form predictions for two classical linear parts, for cross-checking the
// exact kernel:
//  - Elliptic: A = diag(lambda, 1/lambda) with lambda not a root of unity; the
//    commuting jets are (z1*phi1(z1 z2), z2*phi2(z1 z2)) and the basis elements are
//    the resonant monomial slices z1(z1 z2)^k and z2(z1 z2)^k.
//  - Jordan2: the unipotent 2x2 Jordan block; the classical prediction is the family
//    (z1 + k(z2), z2), i.e. basis (z2^d, 0) for d = 2..order.  NOTE: the exact kernel
//    is strictly larger (it also contains (z1 z2^{d-1}, z2^d) for every d — witness
//    (z1 + z1 z2, z2 + z2^2) commutes with the block exactly), so this oracle predicts
//    a proper subspace; `centralizer_basis` reports the honest kernel.
enum class OracleKind { Elliptic, Jordan2 };
CentralizerBasis centralizer_oracle(OracleKind kind, const ExactComplex& lambda, int order);

// delta(A, m): dimension of the commuting tangent-to-identity jets at order m.
int centralizer_dimension(const Matrix<ExactComplex>& linear, int order);

}  // namespace jetlin
