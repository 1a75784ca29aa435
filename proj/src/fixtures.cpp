#include "jetlin/fixtures.hpp"

#include "jetlin/linalg.hpp"

namespace jetlin {

uint64_t RationalSource::next_u64() {
  // splitmix64: tiny, seedable, identical on every platform (the standard
  // library's distributions are not specified bit-for-bit across vendors).
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long RationalSource::next_in(long lo, long hi) {
  return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
}

Rational RationalSource::next_rational(long bound) {
  Rational q(next_in(-bound, bound), next_in(1, bound));
  q.canonicalize();
  return q;
}

ExactComplex RationalSource::next_complex(long bound) {
  return ExactComplex(next_rational(bound), next_rational(bound));
}

ExactGerm random_germ_with_linear(RationalSource& rng, const Matrix<ExactComplex>& linear,
                                  int order, long bound) {
  const int n = linear.rows();
  auto space = jet_space(n, order);
  std::vector<ExactScalarJet> comps;
  comps.reserve(static_cast<size_t>(n));
  ExactGerm base = ExactGerm::from_linear(space, linear);
  for (int j = 0; j < n; ++j) {
    ExactScalarJet c = base.component(j);
    for (int idx = space->degree_offset(2); idx < space->icount(); ++idx) {
      if (rng.next_in(0, 1) == 0) continue;  // keep roughly half the slots zero
      c.set_coeff_internal(idx, rng.next_complex(bound));
    }
    comps.push_back(std::move(c));
  }
  return ExactGerm(space, std::move(comps));
}

ExactGerm random_tangent_identity_germ(RationalSource& rng, int vars, int order, long bound) {
  return random_germ_with_linear(rng, Matrix<ExactComplex>::identity(vars), order, bound);
}

namespace {

ExactComplex ec(long re_num, long re_den = 1, long im_num = 0, long im_den = 1) {
  return ExactComplex(Rational(re_num, re_den), Rational(im_num, im_den));
}

Matrix<ExactComplex> matrix2(ExactComplex a00, ExactComplex a01, ExactComplex a10,
                             ExactComplex a11) {
  Matrix<ExactComplex> m(2, 2);
  m.at(0, 0) = std::move(a00);
  m.at(0, 1) = std::move(a01);
  m.at(1, 0) = std::move(a10);
  m.at(1, 1) = std::move(a11);
  return m;
}

// (4z1 + c*z2^2, 2z2): the resonance 2^2 = 4 makes the z2^2 slot in the first
// coordinate an obstruction whenever c != 0.
ExactGerm obstructed_germ(int order) {
  auto space = jet_space(2, order);
  ExactGerm base =
      ExactGerm::from_linear(space, matrix2(ec(4), ec(0), ec(0), ec(2)));
  std::vector<ExactScalarJet> comps{base.component(0), base.component(1)};
  comps[0].set_coeff(MultiIndex({0, 2}), ec(1));
  return ExactGerm(space, std::move(comps));
}

ParamGerm family_scalar_germ(int order) {
  auto space = jet_space(1, order);
  std::vector<ScalarJet<ExactParamPoly>> comps{ScalarJet<ExactParamPoly>(space)};
  comps[0].set_coeff(MultiIndex({1}), ExactParamPoly::constant(ec(2)));
  comps[0].set_coeff(MultiIndex({2}),
                     ExactParamPoly::from_coefficients({ec(0), ec(1)}));  // t * z^2
  return ParamGerm(space, std::move(comps));
}

ParamGerm family_obstructed_germ(int order) {
  auto space = jet_space(2, order);
  std::vector<ScalarJet<ExactParamPoly>> comps{ScalarJet<ExactParamPoly>(space),
                                               ScalarJet<ExactParamPoly>(space)};
  comps[0].set_coeff(MultiIndex({1, 0}), ExactParamPoly::constant(ec(4)));
  comps[0].set_coeff(MultiIndex({0, 2}),
                     ExactParamPoly::from_coefficients({ec(0), ec(1)}));  // t * z2^2
  comps[1].set_coeff(MultiIndex({0, 1}), ExactParamPoly::constant(ec(2)));
  return ParamGerm(space, std::move(comps));
}

// h o diag(i, -i) o h^{-1} with h = (z1 + z2^2, z2 + z1^2): order-4 linear
// part, nonlinear terms, exactly linearizable by construction.
ExactGerm conjugated_finite_order_germ(int order) {
  auto space = jet_space(2, order);
  ExactGerm h = ExactGerm::identity(space);
  {
    std::vector<ExactScalarJet> comps{h.component(0), h.component(1)};
    comps[0].set_coeff(MultiIndex({0, 2}), ec(1));
    comps[1].set_coeff(MultiIndex({2, 0}), ec(1));
    h = ExactGerm(space, std::move(comps));
  }
  ExactGerm a = ExactGerm::from_linear(
      space, matrix2(ec(0, 1, 1), ec(0), ec(0), ec(0, 1, -1)));
  return compose(h, compose(a, germ_inverse(h)));
}

ExactGerm neg_parabolic_germ(int order) {
  auto space = jet_space(1, order);
  std::vector<ExactScalarJet> comps{ExactScalarJet(space)};
  comps[0].set_coeff(MultiIndex({1}), ec(-1));
  comps[0].set_coeff(MultiIndex({2}), ec(1));
  return ExactGerm(space, std::move(comps));
}

ExactGerm scalar_double_germ(int order) {
  auto space = jet_space(1, order);
  std::vector<ExactScalarJet> comps{ExactScalarJet(space)};
  comps[0].set_coeff(MultiIndex({1}), ec(2));
  comps[0].set_coeff(MultiIndex({2}), ec(1));
  return ExactGerm(space, std::move(comps));
}

ExactGerm embed_phi_jet(int order) {
  auto space = jet_space(1, order);
  std::vector<ExactScalarJet> comps{ExactScalarJet(space)};
  comps[0].set_coeff(MultiIndex({2}), ec(1));
  comps[0].set_coeff(MultiIndex({3}), ec(-1, 2));
  return ExactGerm(space, std::move(comps));
}

Json golden_eigenspec() {
  // theta = (sqrt(5) - 1) / 2, the slowest-approximable irrational.
  BigFloat five = BigFloat::from_long(5, 256);
  BigFloat theta = (five.sqrt() - BigFloat::from_long(1, 256)) / BigFloat::from_long(2, 256);
  return Json{{"kind", "symbolic"},
              {"torsion_order", 1},
              {"a", Json::array({0, 0})},
              {"b", Json::array({1, -1})},
              {"theta", Json{{"real", theta.to_string()},
                             {"bits", 256},
                             {"assume_irrational", true}}}};
}

}  // namespace

std::vector<Fixture> make_fixtures(uint64_t seed) {
  std::vector<Fixture> out;

  // --- pinned linear parts -------------------------------------------------
  out.push_back({"jordan2_matrix.json",
                 matrix_to_json(matrix2(ec(1), ec(1), ec(0), ec(1)))});
  out.push_back({"elliptic_matrix.json",
                 matrix_to_json(matrix2(ec(2), ec(0), ec(0), ec(1, 2)))});
  out.push_back({"diag35_matrix.json",
                 matrix_to_json(matrix2(ec(3), ec(0), ec(0), ec(5)))});
  out.push_back({"rotation3_matrix.json",
                 matrix_to_json(matrix2(ec(0), ec(-1), ec(1), ec(-1)))});

  // --- pinned germs ---------------------------------------------------------
  out.push_back({"obstructed_germ.json", germ_to_json(obstructed_germ(3))});
  out.push_back({"family_scalar_germ.json", germ_to_json(family_scalar_germ(6))});
  out.push_back({"family_obstructed_germ.json", germ_to_json(family_obstructed_germ(3))});
  out.push_back({"finite_order_germ.json", germ_to_json(conjugated_finite_order_germ(5))});
  out.push_back({"neg_parabolic_germ.json", germ_to_json(neg_parabolic_germ(6))});
  out.push_back({"scalar_double_germ.json", germ_to_json(scalar_double_germ(8))});
  out.push_back({"embed_phi_jet.json", germ_to_json(embed_phi_jet(5))});

  // --- pinned eigenvalue specifications --------------------------------------
  out.push_back({"eigen_exact_i.json",
                 Json{{"kind", "exact"},
                      {"values", Json::array({Json{{"re", "0"}, {"im", "1"}},
                                              Json{{"re", "0"}, {"im", "-1"}}})}}});
  out.push_back({"eigen_golden.json", golden_eigenspec()});
  out.push_back({"eigen_torsion4.json",
                 Json{{"kind", "symbolic"},
                      {"torsion_order", 4},
                      {"a", Json::array({1, 3})},
                      {"b", Json::array({0, 0})}}});
  out.push_back({"eigen_rational_theta.json",
                 Json{{"kind", "symbolic"},
                      {"torsion_order", 1},
                      {"a", Json::array({0, 0})},
                      {"b", Json::array({1, -1})},
                      {"theta", Json{{"rational", "3/7"}}}}});

  // --- analysis inputs --------------------------------------------------------
  {
    Json coeffs = Json::array();
    for (int k = 0; k < 8; ++k) coeffs.push_back("0");
    coeffs.push_back("1");
    out.push_back({"poly_z8.json", Json{{"coefficients", std::move(coeffs)}}});
  }
  out.push_back(
      {"growth_certificate.json",
       Json{{"c_set", Json{{"kind", "disk"},
                           {"center", Json{{"re", "0"}, {"im", "0"}}},
                           {"radius", "1"}}},
            {"k_set", Json{{"kind", "disk"},
                           {"center", Json{{"re", "0"}, {"im", "0"}}},
                           {"radius", "2"}}},
            {"rho1", "2"},
            {"degree_factor", 1}}});
  out.push_back({"params_example.json",
                 Json{{"values", Json::array({"1", Json{{"re", "0"}, {"im", "1/2"}}})}}});

  // --- seeded random germs -----------------------------------------------------
  RationalSource rng(seed);
  for (int k = 0; k < 3; ++k) {
    out.push_back({"random_tangent_" + std::to_string(k) + "_germ.json",
                   germ_to_json(random_tangent_identity_germ(rng, 2, 4))});
  }
  {
    Matrix<ExactComplex> two(1, 1);
    two.at(0, 0) = ec(2);
    out.push_back({"random_scalar_germ.json",
                   germ_to_json(random_germ_with_linear(rng, two, 6))});
  }
  return out;
}

}  // namespace jetlin
