#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetlin/centralizer.hpp"
#include "jetlin/errors.hpp"
#include "jetlin/linalg.hpp"
#include "jetlin/spectrum.hpp"
#include "test_util.hpp"

using namespace jetlin;
using namespace jetlin::testutil;

namespace {

// Rank of the homogeneous-degree-d block [M | rhs] to decide solvability of
// M x = rhs without going through the solver.
int augmented_rank(const Matrix<ExactComplex>& m, const std::vector<ExactComplex>& rhs) {
  Matrix<ExactComplex> aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[static_cast<size_t>(r)];
  }
  auto rr = row_reduce(aug);
  int rank = 0;
  for (int r = 0; r < aug.rows(); ++r)
    if (rr.pivot_col_of_row[static_cast<size_t>(r)] >= 0) ++rank;
  return rank;
}

int plain_rank(const Matrix<ExactComplex>& m) {
  auto rr = row_reduce(m);
  int rank = 0;
  for (int r = 0; r < m.rows(); ++r)
    if (rr.pivot_col_of_row[static_cast<size_t>(r)] >= 0) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("homological matrix of a diagonal part is diagonal with lambda^i - lambda_j") {
  Matrix<ExactComplex> a = diag2(ec(2), ecq(1, 2));
  HomologicalMatrix hm = homological_matrix(a, 2);
  auto sp = jet_space(2, 2);
  int dim = 2 * sp->homogeneous_count(2);
  REQUIRE(hm.matrix.rows() == dim);
  REQUIRE(hm.matrix.cols() == dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      if (r != c) CHECK(hm.matrix.at(r, c).is_zero());

  // Degree-2 monomials in graded-lex order: (2,0), (1,1), (0,2).
  // Slot (i, j) has entry lambda^i - lambda_j.
  // ((2,0), coord 0): 4 - 2 = 2; ((2,0), coord 1): 4 - 1/2 = 7/2.
  CHECK(hm.matrix.at(0, 0) == ec(2));
  CHECK(hm.matrix.at(1, 1) == ecq(7, 2));
  // ((1,1), coord 0): 1 - 2 = -1; ((1,1), coord 1): 1 - 1/2 = 1/2.
  CHECK(hm.matrix.at(2, 2) == ec(-1));
  CHECK(hm.matrix.at(3, 3) == ecq(1, 2));
  // ((0,2), coord 0): 1/4 - 2 = -7/4; ((0,2), coord 1): 1/4 - 1/2 = -1/4.
  CHECK(hm.matrix.at(4, 4) == ecq(-7, 4));
  CHECK(hm.matrix.at(5, 5) == ecq(-1, 4));
}

TEST_CASE("homological matrix of the identity is zero") {
  Matrix<ExactComplex> a = Matrix<ExactComplex>::identity(2);
  HomologicalMatrix hm = homological_matrix(a, 3);
  for (int r = 0; r < hm.matrix.rows(); ++r)
    for (int c = 0; c < hm.matrix.cols(); ++c)
      CHECK(hm.matrix.at(r, c).is_zero());
}

TEST_CASE("shift-difference matrix of the unipotent block is strictly lower triangular") {
  Matrix<ExactComplex> j = jordan2();
  for (int d = 2; d <= 5; ++d) {
    Matrix<ExactComplex> sd = shift_difference_matrix(j, d);
    REQUIRE(sd.rows() == d + 1);
    REQUIRE(sd.cols() == d + 1);
    for (int r = 0; r < sd.rows(); ++r) {
      for (int c = 0; c < sd.cols(); ++c) {
        if (r <= c) {
          CHECK(sd.at(r, c).is_zero());
        } else {
          // Binomial C(d - c, r - c): phi = z1^(d-c) z2^c contributes
          // C(d-c, r-c) * z1^(d-r) z2^r to phi(z1 + z2, z2) - phi(z).
          long binom = 1;
          for (int t = 0; t < r - c; ++t) binom = binom * (d - c - t) / (t + 1);
          CHECK(sd.at(r, c) == ec(binom));
        }
      }
    }
    // Kernel is exactly span{z2^d}: rank d.
    CHECK(plain_rank(sd) == d);
    auto ker = kernel_basis(row_reduce(sd));
    REQUIRE(ker.size() == 1);
    for (int r = 0; r < d; ++r) CHECK(ker[0][static_cast<size_t>(r)].is_zero());
    CHECK_FALSE(ker[0][static_cast<size_t>(d)].is_zero());
  }
}

TEST_CASE("scalar substitution-difference solvability at the top slot") {
  // phi(Az) - phi(z) = z2^d has the solution phi = z1 z2^{d-1}; z1^d has none.
  Matrix<ExactComplex> j = jordan2();
  for (int d = 2; d <= 4; ++d) {
    Matrix<ExactComplex> sd = shift_difference_matrix(j, d);
    int base = plain_rank(sd);

    std::vector<ExactComplex> top(static_cast<size_t>(d + 1), ExactComplex::zero());
    top[static_cast<size_t>(d)] = ExactComplex::one();  // z2^d
    CHECK(augmented_rank(sd, top) == base);

    std::vector<ExactComplex> bottom(static_cast<size_t>(d + 1), ExactComplex::zero());
    bottom[0] = ExactComplex::one();  // z1^d
    CHECK(augmented_rank(sd, bottom) == base + 1);
  }
}

TEST_CASE("centralizer dimension: elliptic, unipotent, and resonance-free cases") {
  // Elliptic diag(lambda, 1/lambda), lambda = 2: resonant slots are z1(z1 z2)^k and
  // z2(z1 z2)^k, giving 2*floor((m-1)/2).
  Matrix<ExactComplex> ell = diag2(ec(2), ecq(1, 2));
  CHECK(centralizer_dimension(ell, 5) == 4);
  CHECK(centralizer_dimension(ell, 6) == 4);
  CHECK(centralizer_dimension(ell, 7) == 6);

  // Unipotent Jordan block: both (z2^d, 0) and (z1 z2^{d-1}, z2^d) for d = 2..m.
  CHECK(centralizer_dimension(jordan2(), 4) == 6);
  CHECK(centralizer_dimension(jordan2(), 2) == 2);

  // Resonance-free diagonal: only the identity commutes.
  CHECK(centralizer_dimension(diag2(ec(3), ec(5)), 6) == 0);
}

TEST_CASE("centralizer dimension equals the resonance count for diagonal parts") {
  Matrix<ExactComplex> a = diag2(ExactComplex::i(), eci(0, -1));
  EigenSpec spec = EigenSpec::exact({ExactComplex::i(), eci(0, -1)});
  for (int m = 2; m <= 5; ++m) {
    CHECK(centralizer_dimension(a, m) ==
          static_cast<int>(resonances(spec, m).pairs.size()));
  }
}

TEST_CASE("elliptic centralizer basis commutes and matches the closed form") {
  Matrix<ExactComplex> a = diag2(ec(2), ecq(1, 2));
  CentralizerBasis cb = centralizer_basis(a, 5);
  REQUIRE(cb.delta == 4);
  REQUIRE(cb.basis.size() == 4);
  CHECK(cb.order == 5);
  for (const ExactGerm& g : cb.basis) {
    CHECK(verify_commute(g, a));
    // Tangent to identity: linear part is the identity matrix.
    CHECK(g.linear_part() == Matrix<ExactComplex>::identity(2));
  }
  // Free slots are the resonant pairs in scan order:
  // degree 3: ((2,1),0), ((1,2),1); degree 5: ((3,2),0), ((2,3),1).
  REQUIRE(cb.slots.size() == 4);
  CHECK(cb.slots[0].index == MultiIndex({2, 1}));
  CHECK(cb.slots[0].coordinate == 0);
  CHECK(cb.slots[1].index == MultiIndex({1, 2}));
  CHECK(cb.slots[1].coordinate == 1);
  CHECK(cb.slots[2].index == MultiIndex({3, 2}));
  CHECK(cb.slots[2].coordinate == 0);
  CHECK(cb.slots[3].index == MultiIndex({2, 3}));
  CHECK(cb.slots[3].coordinate == 1);

  CentralizerBasis oracle = centralizer_oracle(OracleKind::Elliptic, ec(2), 5);
  REQUIRE(oracle.delta == cb.delta);
  for (size_t k = 0; k < cb.basis.size(); ++k) {
    CHECK(cb.basis[k] == oracle.basis[k]);
  }
}

TEST_CASE("unipotent centralizer contains the coupled witness beyond the scalar family") {
  Matrix<ExactComplex> j = jordan2();
  auto sp = jet_space(2, 4);

  // (z1 + z2^2, z2) commutes — the classical scalar family.
  ExactGerm scalar_member = germ_with(sp, Matrix<ExactComplex>::identity(2),
                                      {{0, {0, 2}, ExactComplex::one()}});
  CHECK(verify_commute(scalar_member, j));

  // (z1 + z1 z2, z2 + z2^2) commutes as well — outside that family.
  ExactGerm coupled = germ_with(sp, Matrix<ExactComplex>::identity(2),
                                {{0, {1, 1}, ExactComplex::one()},
                                 {1, {0, 2}, ExactComplex::one()}});
  CHECK(verify_commute(coupled, j));

  // (z1 + z1^2, z2) does not commute.
  ExactGerm bad = germ_with(sp, Matrix<ExactComplex>::identity(2),
                            {{0, {2, 0}, ExactComplex::one()}});
  CHECK_FALSE(verify_commute(bad, j));

  CentralizerBasis cb = centralizer_basis(j, 4);
  CHECK(cb.delta == 6);
  for (const ExactGerm& g : cb.basis) CHECK(verify_commute(g, j));

  // The closed-form prediction spans a proper subspace: it only lists (z2^d, 0).
  CentralizerBasis oracle = centralizer_oracle(OracleKind::Jordan2, ExactComplex::one(), 4);
  CHECK(oracle.delta == 3);
  for (const ExactGerm& g : oracle.basis) CHECK(verify_commute(g, j));
}

TEST_CASE("centralizer combinations are psi_A(s) = id + sum s_v * nonlinear basis part") {
  Matrix<ExactComplex> a = diag2(ec(2), ecq(1, 2));
  int delta = centralizer_dimension(a, 5);
  REQUIRE(delta == 4);

  std::vector<ExactComplex> zero(static_cast<size_t>(delta), ExactComplex::zero());
  ExactGerm at_zero = centralizer_combination(a, 5, zero);
  CHECK(at_zero == ExactGerm::identity(jet_space(2, 5)));

  std::vector<ExactComplex> s = {ec(3), ecq(-1, 2), ExactComplex::i(), ec(0)};
  ExactGerm psi = centralizer_combination(a, 5, s);
  CHECK(verify_commute(psi, a));
  CHECK(psi.linear_part() == Matrix<ExactComplex>::identity(2));

  // Linearity of the nonlinear part in s: psi(s + s') - id == (psi(s) - id) + (psi(s') - id).
  std::vector<ExactComplex> s2 = {ec(1), ec(1), ec(-2), ecq(5, 3)};
  std::vector<ExactComplex> sum(static_cast<size_t>(delta), ExactComplex::zero());
  for (size_t k = 0; k < sum.size(); ++k) sum[k] = s[k] + s2[k];
  ExactGerm lhs = centralizer_combination(a, 5, sum);
  ExactGerm ga = centralizer_combination(a, 5, s);
  ExactGerm gb = centralizer_combination(a, 5, s2);
  auto sp = jet_space(2, 5);
  ExactGerm id = ExactGerm::identity(sp);
  for (int d = 2; d <= 5; ++d) {
    auto slice = [&](const ExactGerm& g, int coord) {
      return g.component(coord).homogeneous_part(d);
    };
    for (int coord = 0; coord < 2; ++coord) {
      CHECK(slice(lhs, coord) == slice(ga, coord) + slice(gb, coord));
    }
  }
  (void)id;

  std::vector<ExactComplex> wrong_len = {ec(1)};
  CHECK_THROWS_AS(centralizer_combination(a, 5, wrong_len), Error);
}

TEST_CASE("elliptic oracle rejects root-of-unity lambda") {
  CHECK_THROWS_AS(centralizer_oracle(OracleKind::Elliptic, ExactComplex::i(), 5), Error);
  CHECK_THROWS_AS(centralizer_oracle(OracleKind::Elliptic, ec(-1), 5), Error);
}

TEST_CASE("homological matrix rejects dimension mismatches") {
  Matrix<ExactComplex> a = diag2(ec(2), ecq(1, 2));
  CHECK_THROWS_AS(homological_matrix(a, 1), Error);
  CHECK_THROWS_AS(shift_difference_matrix(a, 0), Error);
}
