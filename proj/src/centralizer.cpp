#include "jetlin/centralizer.hpp"

#include <utility>

#include "jetlin/errors.hpp"

namespace jetlin {

namespace {

void require_linear_map(const Matrix<ExactComplex>& linear) {
  require(linear.rows() == linear.cols(), Errc::DimensionMismatch,
          "linear part must be square");
  require(linear.rows() >= 1 && linear.rows() <= 16, Errc::DimensionMismatch,
          "between 1 and 16 variables are supported");
  require(linear.try_inverse().has_value(), Errc::SingularLinearPart,
          "linear part is not invertible");
}

ExactGerm germ_of_linear(const Matrix<ExactComplex>& linear, int order) {
  return ExactGerm::from_linear(jet_space(linear.rows(), order), linear);
}

}  // namespace

HomologicalMatrix homological_matrix(const Matrix<ExactComplex>& linear, int degree) {
  require_linear_map(linear);
  require(degree >= 2, Errc::DegreeOutOfRange, "homological operator acts on degrees >= 2");
  const int n = linear.rows();
  auto space = jet_space(n, degree);
  const int mu = space->homogeneous_count(degree);
  const int dim = mu * n;
  const int base = space->degree_offset(degree);

  ExactGerm a_germ = germ_of_linear(linear, degree);
  MonomialPowers<ExactComplex> powers(a_germ);

  HomologicalMatrix out;
  out.degree = degree;
  out.matrix = Matrix<ExactComplex>(dim, dim);

  for (int r = 0; r < mu; ++r) {
    // Column block for the monomial z^i of local rank r: (z^i) o A contributes within
    // the same coordinate; A o u contributes -A[row_coord][col_coord] at the monomial
    // itself.
    const ScalarJet<ExactComplex>& pow = powers.power(base + r);
    for (int j = 0; j < n; ++j) {
      const int col = r * n + j;
      for (int rp = 0; rp < mu; ++rp) {
        const ExactComplex& c = pow.coeff_internal(base + rp);
        if (!c.is_zero()) out.matrix.at(rp * n + j, col) = out.matrix.at(rp * n + j, col) + c;
      }
      for (int jp = 0; jp < n; ++jp) {
        const ExactComplex& a = linear.at(jp, j);
        if (!a.is_zero()) out.matrix.at(r * n + jp, col) = out.matrix.at(r * n + jp, col) - a;
      }
    }
  }
  return out;
}

Matrix<ExactComplex> shift_difference_matrix(const Matrix<ExactComplex>& linear, int degree) {
  require_linear_map(linear);
  require(degree >= 1, Errc::DegreeOutOfRange, "substitution difference needs degree >= 1");
  const int n = linear.rows();
  auto space = jet_space(n, degree);
  const int mu = space->homogeneous_count(degree);
  const int base = space->degree_offset(degree);

  ExactGerm a_germ = germ_of_linear(linear, degree);
  MonomialPowers<ExactComplex> powers(a_germ);

  Matrix<ExactComplex> m(mu, mu);
  for (int c = 0; c < mu; ++c) {
    const ScalarJet<ExactComplex>& pow = powers.power(base + c);
    for (int r = 0; r < mu; ++r) {
      ExactComplex v = pow.coeff_internal(base + r);
      if (r == c) v = v - ExactComplex::one();
      m.at(r, c) = v;
    }
  }
  return m;
}

CentralizerBasis centralizer_basis(const Matrix<ExactComplex>& linear, int order) {
  require_linear_map(linear);
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  const int n = linear.rows();
  auto space = jet_space(n, order);

  CentralizerBasis out;
  out.order = order;
  for (int d = 2; d <= order; ++d) {
    HomologicalMatrix hm = homological_matrix(linear, d);
    RowReduction<ExactComplex> rr = row_reduce(hm.matrix);
    std::vector<std::vector<ExactComplex>> kernel = kernel_basis(rr);
    auto degree_space = jet_space(n, d);
    for (size_t v = 0; v < kernel.size(); ++v) {
      ExactGerm g = ExactGerm::identity(space);
      g = with_homogeneous_slice(g, d, kernel[v]);
      out.basis.push_back(std::move(g));
      auto [exponents, coordinate] = degree_space->slot_decode(d, rr.free_columns[v]);
      out.slots.push_back({exponents, coordinate});
    }
  }
  out.delta = static_cast<int>(out.basis.size());
  return out;
}

int centralizer_dimension(const Matrix<ExactComplex>& linear, int order) {
  require_linear_map(linear);
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  int delta = 0;
  for (int d = 2; d <= order; ++d) {
    HomologicalMatrix hm = homological_matrix(linear, d);
    RowReduction<ExactComplex> rr = row_reduce(hm.matrix);
    delta += static_cast<int>(rr.free_columns.size());
  }
  return delta;
}

ExactGerm centralizer_combination(const Matrix<ExactComplex>& linear, int order,
                                  const std::vector<ExactComplex>& s) {
  CentralizerBasis cb = centralizer_basis(linear, order);
  require(s.size() == cb.basis.size(), Errc::ParameterLengthMismatch,
          "expected " + std::to_string(cb.basis.size()) + " parameters, got " +
              std::to_string(s.size()));
  ExactGerm g = ExactGerm::identity(jet_space(linear.rows(), order));
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k].is_zero()) continue;
    g = g + cb.basis[k].nonlinear_part().scaled(s[k]);
  }
  return g;
}

bool verify_commute(const ExactGerm& h, const Matrix<ExactComplex>& linear) {
  require_linear_map(linear);
  require(h.vars() == linear.rows(), Errc::DimensionMismatch,
          "germ and linear part have different variable counts");
  ExactGerm a_germ = germ_of_linear(linear, h.order());
  return compose(h, a_germ) == compose(a_germ, h);
}

CentralizerBasis centralizer_oracle(OracleKind kind, const ExactComplex& lambda, int order) {
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  auto space = jet_space(2, order);
  CentralizerBasis out;
  out.order = order;

  if (kind == OracleKind::Elliptic) {
    require(!lambda.is_zero(), Errc::DivisionByZero, "elliptic eigenvalue must be nonzero");
    require(!lambda.is_root_of_unity(), Errc::RootOfUnityLambda,
            "elliptic oracle needs an eigenvalue that is not a root of unity");
    // Resonant slices of diag(lambda, 1/lambda): z1*(z1 z2)^k in coordinate 1,
    // z2*(z1 z2)^k in coordinate 2, for every k >= 1 with 2k + 1 <= order.
    for (int k = 1; 2 * k + 1 <= order; ++k) {
      MultiIndex first{{k + 1, k}};
      MultiIndex second{{k, k + 1}};
      ExactGerm g1 = ExactGerm::identity(space);
      g1 = g1 + ExactGerm::monomial_slice(space, first, 0, ExactComplex::one());
      out.basis.push_back(std::move(g1));
      out.slots.push_back({first, 0});
      ExactGerm g2 = ExactGerm::identity(space);
      g2 = g2 + ExactGerm::monomial_slice(space, second, 1, ExactComplex::one());
      out.basis.push_back(std::move(g2));
      out.slots.push_back({second, 1});
    }
  } else {
    // Classical prediction for the unipotent Jordan block: (z1 + k(z2), z2),
    // i.e. the slices (z2^d, 0).  See the header note: the exact kernel is larger.
    for (int d = 2; d <= order; ++d) {
      MultiIndex mi{{0, d}};
      ExactGerm g = ExactGerm::identity(space);
      g = g + ExactGerm::monomial_slice(space, mi, 0, ExactComplex::one());
      out.basis.push_back(std::move(g));
      out.slots.push_back({mi, 0});
    }
  }
  out.delta = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace jetlin
