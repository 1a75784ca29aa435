#include "jetlin/linearizer.hpp"

#include <numeric>
#include <utility>

#include "jetlin/errors.hpp"

namespace jetlin {

namespace {

// Outcome of the degree-d slot system L u = rhs: either a full solution (free
// columns taken from `s`, or zero when `s` is null) or the first inconsistent
// row with its post-elimination residual.
template <class T>
struct DegreeSolve {
  bool solvable = true;
  std::vector<T> solution;
  std::vector<int> free_slots;
  int bad_slot = -1;
  T residual{};
};

template <class T>
DegreeSolve<T> solve_degree(const Matrix<T>& op, const std::vector<T>& rhs, const T* s_values) {
  RowReduction<T> rr = row_reduce(op, rhs);
  DegreeSolve<T> out;
  out.free_slots = rr.free_columns;

  // Unused rows of the reduced system are entirely zero (every pivot clears its
  // column in all rows), so a nonzero reduced right-hand side there certifies
  // inconsistency independently of how free slots are later assigned.
  for (int r = 0; r < op.rows(); ++r) {
    if (rr.pivot_col_of_row[r] == -1 && !ring_is_zero(rr.rhs[r])) {
      out.solvable = false;
      out.bad_slot = r;
      out.residual = rr.rhs[r];
      return out;
    }
  }

  std::vector<T> x(static_cast<size_t>(op.cols()), T{});
  for (size_t k = 0; k < rr.free_columns.size(); ++k) {
    if (s_values) x[rr.free_columns[k]] = s_values[k];
  }
  for (int c = 0; c < op.cols(); ++c) {
    const int pr = rr.pivot_row_of_col[c];
    if (pr < 0) continue;
    T v = rr.rhs[pr];
    for (int fc : rr.free_columns) {
      const T& coeff = rr.reduced.at(pr, fc);
      if (!ring_is_zero(coeff) && !ring_is_zero(x[fc])) v = v - coeff * x[fc];
    }
    x[c] = std::move(v);
  }
  out.solution = std::move(x);
  return out;
}

Matrix<ExactParamPoly> to_param_matrix(const Matrix<ExactComplex>& m) {
  Matrix<ExactParamPoly> out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out.at(r, c) = ExactParamPoly::constant(m.at(r, c));
  return out;
}

}  // namespace

LinearizationResult linearize(const ExactGerm& f, int order,
                              const std::vector<ExactComplex>& s) {
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  require(order <= f.order(), Errc::OrderIncrease,
          "cannot linearize beyond the germ's stored order");
  ExactGerm fp = (order == f.order()) ? f : project(f, order);
  const Matrix<ExactComplex>& linear = fp.linear_part();
  require(linear.try_inverse().has_value(), Errc::SingularLinearPart,
          "germ has a singular linear part");

  if (!s.empty()) {
    const int delta = centralizer_dimension(linear, order);
    require(static_cast<int>(s.size()) == delta, Errc::ParameterLengthMismatch,
            "expected " + std::to_string(delta) + " resonant-slot parameters, got " +
                std::to_string(s.size()));
  }

  auto space = fp.space_ptr();
  ExactGerm a_germ = ExactGerm::from_linear(space, linear);
  LinearizationResult res(ExactGerm::identity(space));
  size_t s_pos = 0;

  for (int d = 2; d <= order; ++d) {
    ExactGerm identity_residual = compose(fp, res.h) - compose(res.h, a_germ);
    std::vector<ExactComplex> rho = homogeneous_slice(identity_residual, d);
    HomologicalMatrix hom = homological_matrix(linear, d);
    DegreeSolve<ExactComplex> sol =
        solve_degree(hom.matrix, rho, s.empty() ? nullptr : s.data() + s_pos);

    auto degree_space = jet_space(fp.vars(), d);
    if (!sol.solvable) {
      auto [mono, coord] = degree_space->slot_decode(d, sol.bad_slot);
      res.status = LinearizationResult::Status::Obstructed;
      res.obstruction = Obstruction{d, mono, coord, sol.residual};
      return res;
    }
    for (int fc : sol.free_slots) {
      auto [mono, coord] = degree_space->slot_decode(d, fc);
      res.free_slots.push_back({mono, coord});
    }
    s_pos += sol.free_slots.size();
    res.h = with_homogeneous_slice(res.h, d, sol.solution);
  }
  res.status = LinearizationResult::Status::Linearized;
  return res;
}

ExactGerm normalization_family(const ExactGerm& f, int order,
                               const std::vector<ExactComplex>& s) {
  LinearizationResult base = linearize(f, order, {});
  if (base.status != LinearizationResult::Status::Linearized) {
    fail(Errc::NotLinearizable,
         "germ is obstructed at degree " + std::to_string(base.obstruction->degree) +
             "; no normalization family exists");
  }
  ExactGerm psi = centralizer_combination(f.linear_part(), order, s);
  return compose(base.h, psi);
}

FamilyLinearization family_linearize(const ParamGerm& f_t, int order) {
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  require(order <= f_t.order(), Errc::OrderIncrease,
          "cannot linearize beyond the family's stored order");
  ParamGerm fp = (order == f_t.order()) ? f_t : project(f_t, order);

  const int n = fp.vars();
  Matrix<ExactComplex> linear(n, n);
  long d0 = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const ExactParamPoly& entry = fp.linear_part().at(r, c);
      require(entry.degree() <= 0, Errc::SpectrumUnsupported,
              "family linear part must not depend on the parameter");
      linear.at(r, c) = entry.coefficient(0);
    }
  require(linear.try_inverse().has_value(), Errc::SingularLinearPart,
          "family has a singular linear part");
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < fp.space().icount(); ++k)
      d0 = std::max(d0, std::max(0L, fp.component(j).coeff_internal(k).degree()));

  auto space = fp.space_ptr();
  ParamGerm a_germ = ParamGerm::from_linear(space, to_param_matrix(linear));
  ParamGerm h = ParamGerm::identity(space);

  for (int d = 2; d <= order; ++d) {
    ParamGerm identity_residual = compose(h, fp) - compose(a_germ, h);
    std::vector<ExactParamPoly> rho = homogeneous_slice(identity_residual, d);
    std::vector<ExactParamPoly> rhs(rho.size());
    for (size_t k = 0; k < rho.size(); ++k) rhs[k] = -rho[k];
    Matrix<ExactParamPoly> op = to_param_matrix(homological_matrix(linear, d).matrix);
    DegreeSolve<ExactParamPoly> sol = solve_degree<ExactParamPoly>(op, rhs, nullptr);
    if (!sol.solvable) {
      auto degree_space = jet_space(n, d);
      auto [mono, coord] = degree_space->slot_decode(d, sol.bad_slot);
      ParamObstruction witness{d, mono, coord, -sol.residual};
      std::string detail = "resonant slot " + mono.to_string() + " in coordinate " +
                           std::to_string(coord + 1) + " at degree " + std::to_string(d) +
                           " carries the nonzero residual " + witness.witness.to_string();
      throw FamilyObstructedError(std::move(witness), detail);
    }
    h = with_homogeneous_slice(h, d, sol.solution);
  }

  FamilyLinearization out{std::move(h), d0, {}};
  for (int k = out.h_t.space().degree_offset(2); k < out.h_t.space().icount(); ++k) {
    long deg = -1;
    for (int j = 0; j < n; ++j) deg = std::max(deg, out.h_t.component(j).coeff_internal(k).degree());
    if (deg >= 0) out.degree_report.push_back({out.h_t.space().monomial(k), deg});
  }
  return out;
}

ExactGerm average_linearization(const ExactGerm& f, long q, const ExactGerm& k, int order) {
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  require(q >= 1 && q <= 4096, Errc::InvariantViolation,
          "averaging order must be between 1 and 4096");
  require(order <= f.order() && order <= k.order(), Errc::OrderIncrease,
          "cannot average beyond the stored orders");
  require(f.vars() == k.vars(), Errc::DimensionMismatch,
          "germ and comparison map have different variable counts");
  ExactGerm fp = (order == f.order()) ? f : project(f, order);
  ExactGerm kp = (order == k.order()) ? k : project(k, order);

  const Matrix<ExactComplex>& a = fp.linear_part();
  require(a.pow(static_cast<unsigned long>(q)).is_identity(), Errc::TorsionMismatch,
          "linear part does not have exact order dividing q");
  ExactGerm fq = germ_iterate(fp, static_cast<unsigned long>(q));
  require(compose(kp, fq) == kp, Errc::PreconditionFailed,
          "comparison map is not invariant under the q-th iterate");

  Matrix<ExactComplex> a_inv = a.inverse();
  Matrix<ExactComplex> a_inv_i = Matrix<ExactComplex>::identity(fp.vars());
  ExactGerm fi = ExactGerm::identity(fp.space_ptr());
  ExactGerm sum = kp;  // i = 0 term
  for (long i = 1; i < q; ++i) {
    fi = compose(fi, fp);
    a_inv_i = a_inv_i * a_inv;
    ExactGerm left = ExactGerm::from_linear(fp.space_ptr(), a_inv_i);
    sum = sum + compose(left, compose(kp, fi));
  }
  return sum.scaled(ExactComplex(Rational(1, q), Rational(0)));
}

FiniteOrderResult finite_order_test(const ExactGerm& f, int order) {
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  require(order <= f.order(), Errc::OrderIncrease,
          "cannot test beyond the germ's stored order");
  ExactGerm fp = (order == f.order()) ? f : project(f, order);
  const Matrix<ExactComplex>& a = fp.linear_part();
  const int n = fp.vars();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r != c && !a.at(r, c).is_zero()) {
        fail(Errc::SpectrumUnsupported,
             "finite-order test needs a diagonal linear part; entry (" + std::to_string(r + 1) +
                 "," + std::to_string(c + 1) + ") is nonzero");
      }
    }
  long q = 1;
  for (int j = 0; j < n; ++j) {
    const ExactComplex& lambda = a.at(j, j);
    if (!lambda.is_root_of_unity()) {
      fail(Errc::SpectrumUnsupported,
           "eigenvalue " + lambda.to_string() +
               " is not a root of unity over the Gaussian rationals");
    }
    q = std::lcm(q, lambda.root_of_unity_order());
  }
  FiniteOrderResult res;
  res.q = q;
  if (germ_iterate(fp, static_cast<unsigned long>(q)) ==
      ExactGerm::identity(fp.space_ptr())) {
    res.verdict = FiniteOrderVerdict::LinearizableWitness;
    res.witness = average_linearization(fp, q, ExactGerm::identity(fp.space_ptr()), order);
  } else {
    res.verdict = FiniteOrderVerdict::NotLinearizable;
  }
  return res;
}

ExactGerm embed_axis_map(const Matrix<ExactComplex>& linear, int axis,
                         const ExactScalarJet& phi, int order) {
  require(linear.rows() == linear.cols(), Errc::DimensionMismatch,
          "linear part must be square");
  const int n = linear.rows();
  require(axis >= 0 && axis < n, Errc::DimensionMismatch, "axis out of range");
  require(order >= 1, Errc::DegreeOutOfRange, "order must be >= 1");
  require(linear.try_inverse().has_value(), Errc::SingularLinearPart,
          "linear part is not invertible");
  require(phi.space().vars() == 1, Errc::DimensionMismatch,
          "axis jet must be a one-variable jet");
  require(phi.valuation() >= 2, Errc::ValuationTooLow,
          "axis jet must have valuation >= 2");
  for (int r = 0; r < n; ++r) {
    if (r != axis) {
      require(linear.at(r, axis).is_zero(), Errc::NotEigendirection,
              "axis " + std::to_string(axis + 1) + " is not an eigendirection of the linear part");
    }
  }
  auto space = jet_space(n, order);
  ExactGerm g = ExactGerm::from_linear(space, linear);
  const int top = std::min(order, phi.space().order());
  for (int d = 2; d <= top; ++d) {
    const ExactComplex& c = phi.coeff_internal(phi.space().degree_offset(d));
    if (c.is_zero()) continue;
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[axis] = d;
    g = g + ExactGerm::monomial_slice(space, MultiIndex(std::move(e)), axis, c);
  }
  return g;
}

}  // namespace jetlin
