#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetlin/errors.hpp"
#include "jetlin/spectrum.hpp"
#include "test_util.hpp"

using namespace jetlin;
using namespace jetlin::testutil;

namespace {

SymbolicSpectrum golden_pair() {
  SymbolicSpectrum s;
  s.torsion_order = 1;
  s.a = {0, 0};
  s.b = {1, -1};
  // (sqrt(5)-1)/2, declared irrational.
  BigFloat five = BigFloat::from_long(5, 256);
  s.theta_real = (five.sqrt() - BigFloat::from_long(1, 256)) / BigFloat::from_long(2, 256);
  return s;
}

}  // namespace

TEST_CASE("exact specs reject zero eigenvalues") {
  CHECK_THROWS_AS(EigenSpec::exact({ec(2), ExactComplex::zero()}), Error);
  EigenSpec ok = EigenSpec::exact({ec(2), ecq(1, 2)});
  CHECK(ok.is_exact());
  CHECK(ok.vars() == 2);
}

TEST_CASE("symbolic spec validation enforces shape and representation") {
  SymbolicSpectrum s;
  s.torsion_order = 4;
  s.a = {1, 3};
  s.b = {0, 0};
  CHECK_NOTHROW(EigenSpec::symbolic(s));

  SymbolicSpectrum bad = s;
  bad.torsion_order = 0;
  CHECK_THROWS_AS(EigenSpec::symbolic(bad), Error);

  SymbolicSpectrum needs_theta = s;
  needs_theta.b = {1, -1};  // irrational exponents without any theta
  CHECK_THROWS_AS(EigenSpec::symbolic(needs_theta), Error);

  SymbolicSpectrum mismatched = s;
  mismatched.b = {1};
  CHECK_THROWS_AS(EigenSpec::symbolic(mismatched), Error);
}

TEST_CASE("resonances of diag(2, 1/2): one pair per coordinate at odd degrees") {
  EigenSpec spec = EigenSpec::exact({ec(2), ecq(1, 2)});
  ResonanceSet rs = resonances(spec, 6);
  // lambda^(a,b) = 2^(a-b); = lambda_1 iff a-b = 1, = lambda_2 iff a-b = -1.
  // Degree 3: (2,1)->1, (1,2)->2; degree 5: (3,2)->1, (2,3)->2.
  REQUIRE(rs.pairs.size() == 4);
  CHECK(rs.pairs[0].index == MultiIndex({2, 1}));
  CHECK(rs.pairs[0].coordinate == 0);
  CHECK(rs.pairs[1].index == MultiIndex({1, 2}));
  CHECK(rs.pairs[1].coordinate == 1);
  CHECK(rs.pairs[2].index == MultiIndex({3, 2}));
  CHECK(rs.pairs[2].coordinate == 0);
  CHECK(rs.pairs[3].index == MultiIndex({2, 3}));
  CHECK(rs.pairs[3].coordinate == 1);
}

TEST_CASE("resonances of diag(4,2): exactly the slot ((0,2), first coordinate)") {
  EigenSpec spec = EigenSpec::exact({ec(4), ec(2)});
  ResonanceSet rs = resonances(spec, 3);
  REQUIRE(rs.pairs.size() == 1);
  CHECK(rs.pairs[0].index == MultiIndex({0, 2}));
  CHECK(rs.pairs[0].coordinate == 0);
  CHECK(is_resonant_pair(spec, MultiIndex({0, 2}), 0));
  CHECK_FALSE(is_resonant_pair(spec, MultiIndex({0, 2}), 1));
  CHECK_FALSE(is_resonant_pair(spec, MultiIndex({2, 0}), 0));
}

TEST_CASE("diag(3,5) has no resonances up to order 6") {
  EigenSpec spec = EigenSpec::exact({ec(3), ec(5)});
  CHECK(resonances(spec, 6).pairs.empty());
}

TEST_CASE("resonances are sorted by degree, monomial rank, then coordinate") {
  EigenSpec spec = EigenSpec::exact({ExactComplex::i(), eci(0, -1)});
  ResonanceSet rs = resonances(spec, 5);
  // i^(a+3b) = i requires a+3b = 1 mod 4; = -i requires a+3b = 3 mod 4.
  REQUIRE(rs.pairs.size() == 10);
  auto sp = jet_space(2, 5);
  for (size_t k = 1; k < rs.pairs.size(); ++k) {
    const auto& prev = rs.pairs[k - 1];
    const auto& cur = rs.pairs[k];
    long prev_key = 2L * sp->rank(prev.index) + prev.coordinate;
    long cur_key = 2L * sp->rank(cur.index) + cur.coordinate;
    CHECK(prev_key < cur_key);
  }
  CHECK(rs.pairs[0].index == MultiIndex({3, 0}));
  CHECK(rs.pairs[0].coordinate == 1);
}

TEST_CASE("symbolic resonance semantics: torsion congruence plus irrational part") {
  SymbolicSpectrum s;
  s.torsion_order = 4;
  s.a = {1, 3};
  s.b = {0, 0};
  EigenSpec spec = EigenSpec::symbolic(s);
  // lambda^i = eps^(i.a); resonant with coordinate j iff i.a = a_j (mod 4).
  CHECK(is_resonant_pair(spec, MultiIndex({2, 1}), 0));   // 2+3 = 5 = 1 mod 4
  CHECK_FALSE(is_resonant_pair(spec, MultiIndex({2, 0}), 0));
  CHECK(is_resonant_pair(spec, MultiIndex({0, 3}), 0));   // 9 = 1 mod 4

  // With an irrational part, the b-component must match exactly.
  EigenSpec g = EigenSpec::symbolic(golden_pair());
  CHECK(is_resonant_pair(g, MultiIndex({2, 1}), 0));       // b.i - b_1 = 0
  CHECK_FALSE(is_resonant_pair(g, MultiIndex({3, 0}), 0)); // b.i - b_1 = 2
}

TEST_CASE("multiplicative invariants: exact specs need gaussian roots of unity") {
  MultiplicativeInvariants inv =
      multiplicative_invariants(EigenSpec::exact({ExactComplex::i(), eci(0, -1)}));
  CHECK(inv.l == 0);
  CHECK(inv.q == 4);

  MultiplicativeInvariants one =
      multiplicative_invariants(EigenSpec::exact({ec(1), ec(-1)}));
  CHECK(one.q == 2);

  CHECK_THROWS_AS(multiplicative_invariants(EigenSpec::exact({ec(2), ecq(1, 2)})),
                  Error);
}

TEST_CASE("multiplicative invariants of symbolic specs") {
  SymbolicSpectrum s;
  s.torsion_order = 6;
  s.a = {1, 5};
  s.b = {0, 0};
  MultiplicativeInvariants inv = multiplicative_invariants(EigenSpec::symbolic(s));
  CHECK(inv.l == 0);
  CHECK(inv.q == 6);

  MultiplicativeInvariants g = multiplicative_invariants(EigenSpec::symbolic(golden_pair()));
  CHECK(g.l == 1);
  CHECK(g.q == 1);
}

TEST_CASE("rational theta folds into the torsion part") {
  SymbolicSpectrum s;
  s.torsion_order = 1;
  s.a = {0, 0};
  s.b = {1, -1};
  s.theta_rational = Rational(3, 7);
  FoldedSpectrum folded = fold_torsion(s);
  CHECK_FALSE(folded.has_irrational());
  CHECK(folded.torsion_order == 7);
  CHECK(folded.a == std::vector<long>{3, 4});  // -3 mod 7
  CHECK(folded.b == std::vector<long>{0, 0});
}

TEST_CASE("folding is torsion-aware: lcm of torsion and theta denominator") {
  SymbolicSpectrum s;
  s.torsion_order = 2;
  s.a = {1, 0};
  s.b = {0, 1};
  s.theta_rational = Rational(1, 3);
  FoldedSpectrum folded = fold_torsion(s);
  CHECK(folded.torsion_order == 6);
  // eps^1 = e^{2 pi i / 2} = e^{2 pi i 3/6}; theta = e^{2 pi i 2/6}.
  CHECK(folded.a == std::vector<long>{3, 2});
}

TEST_CASE("irrational theta survives folding untouched") {
  FoldedSpectrum folded = fold_torsion(golden_pair());
  CHECK(folded.has_irrational());
  CHECK(folded.torsion_order == 1);
  CHECK(folded.b == std::vector<long>{1, -1});
}

TEST_CASE("powered specs: q-th power acts on exponents") {
  EigenSpec base = EigenSpec::exact({ExactComplex::i(), eci(0, -1)});
  EigenSpec squared = powered_spec(base, 2);
  CHECK(squared.exact_values() == std::vector<ExactComplex>{ec(-1), ec(-1)});

  // Torsion of the powered spec: q_eps / gcd(q_eps, q) on torsion-only specs.
  SymbolicSpectrum s;
  s.torsion_order = 6;
  s.a = {1, 5};
  s.b = {0, 0};
  EigenSpec spec = EigenSpec::symbolic(s);
  CHECK(multiplicative_invariants(powered_spec(spec, 4)).q == 3);
  CHECK(multiplicative_invariants(powered_spec(spec, 6)).q == 1);
  CHECK(multiplicative_invariants(powered_spec(spec, 5)).q == 6);
}

TEST_CASE("numeric eigenvalues: symbolic values have unit modulus") {
  std::vector<BigComplex> vals = eigenvalues_numeric(EigenSpec::symbolic(golden_pair()), 256);
  REQUIRE(vals.size() == 2);
  for (const BigComplex& v : vals) {
    CHECK((v.abs() - BigFloat::from_long(1, 256)).abs() < BigFloat::two_to(-240, 64));
  }
  // Conjugate pair: product is 1.
  CHECK(((vals[0] * vals[1]) - BigComplex::from_doubles(1, 0, 256)).abs() <
        BigFloat::two_to(-240, 64));

  std::vector<BigComplex> ex = eigenvalues_numeric(EigenSpec::exact({ec(2), ecq(1, 2)}), 128);
  CHECK(ex[0].re == BigFloat::from_long(2, 128));
  CHECK(ex[1].re == BigFloat::from_rational(Rational(1, 2), 128));
}
