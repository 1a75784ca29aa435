#include "jetlin/spectrum.hpp"

#include <algorithm>
#include <numeric>

#include "jetlin/errors.hpp"

namespace jetlin {

namespace {

long positive_mod(long x, long q) {
  long r = x % q;
  return r < 0 ? r + q : r;
}

long checked_lcm(long x, long y) {
  require(x > 0 && y > 0, Errc::InvariantViolation, "lcm arguments must be positive");
  long g = std::gcd(x, y);
  long quotient = x / g;
  require(quotient <= (1L << 40) / y, Errc::InvariantViolation,
          "combined torsion order exceeds the supported range");
  return quotient * y;
}

// Smallest t >= 1 with t*a_k == 0 (mod Q) for every k.
long torsion_order_of(const std::vector<long>& a, long Q) {
  long g = Q;
  for (long ak : a) g = std::gcd(g, positive_mod(ak, Q));
  return Q / g;
}

}  // namespace

void SymbolicSpectrum::validate() const {
  require(torsion_order >= 1, Errc::InvariantViolation, "torsion order must be >= 1");
  require(!a.empty(), Errc::InvariantViolation, "spectrum needs at least one coordinate");
  require(a.size() == b.size(), Errc::InvariantViolation,
          "torsion and rotation exponent lists must have equal length");
  require(a.size() <= 16, Errc::DimensionMismatch, "at most 16 coordinates are supported");
  bool any_b = std::any_of(b.begin(), b.end(), [](long x) { return x != 0; });
  require(!(theta_rational && theta_real), Errc::InvariantViolation,
          "theta must be given as rational or real, not both");
  if (any_b) {
    require(theta_rational || theta_real, Errc::InvariantViolation,
            "nonzero rotation exponents require a theta");
  }
  if (theta_rational) {
    require(theta_rational->get_den() != 0, Errc::ParseError, "theta denominator is zero");
  }
}

EigenSpec EigenSpec::exact(std::vector<ExactComplex> values) {
  require(!values.empty(), Errc::InvariantViolation, "spectrum needs at least one coordinate");
  require(values.size() <= 16, Errc::DimensionMismatch, "at most 16 coordinates are supported");
  for (size_t k = 0; k < values.size(); ++k) {
    require(!values[k].is_zero(), Errc::InvariantViolation,
            "eigenvalue " + std::to_string(k + 1) + " is zero");
  }
  EigenSpec s;
  s.rep_ = std::move(values);
  return s;
}

EigenSpec EigenSpec::symbolic(SymbolicSpectrum sym) {
  sym.validate();
  EigenSpec s;
  s.rep_ = std::move(sym);
  return s;
}

int EigenSpec::vars() const {
  if (is_exact()) return static_cast<int>(exact_values().size());
  return symbolic_form().vars();
}

const std::vector<ExactComplex>& EigenSpec::exact_values() const {
  require(is_exact(), Errc::InvariantViolation, "spectrum is not exact");
  return std::get<std::vector<ExactComplex>>(rep_);
}

const SymbolicSpectrum& EigenSpec::symbolic_form() const {
  require(!is_exact(), Errc::InvariantViolation, "spectrum is not symbolic");
  return std::get<SymbolicSpectrum>(rep_);
}

FoldedSpectrum fold_torsion(const SymbolicSpectrum& s) {
  s.validate();
  FoldedSpectrum out;
  bool any_b = std::any_of(s.b.begin(), s.b.end(), [](long x) { return x != 0; });
  if (!any_b || s.theta_rational) {
    // Fold mu = e^{2*pi*i*p/q_theta} into a common root of unity of order Q.
    long q_theta = 1;
    long p = 0;
    if (any_b) {
      Rational theta = *s.theta_rational;
      // Reduce theta mod 1: only the fractional part matters for e^{2*pi*i*theta}.
      Integer den = theta.get_den();
      Integer num = theta.get_num() % den;
      if (num < 0) num += den;
      require(den.fits_slong_p(), Errc::InvariantViolation,
              "rational theta denominator exceeds the supported torsion range");
      q_theta = den.get_si();
      p = num.get_si();
    }
    long Q = checked_lcm(s.torsion_order, q_theta);
    out.torsion_order = Q;
    out.a.resize(s.a.size());
    out.b.assign(s.b.size(), 0);
    for (size_t k = 0; k < s.a.size(); ++k) {
      long folded = positive_mod(s.a[k], s.torsion_order) * (Q / s.torsion_order);
      if (any_b) {
        long rot = static_cast<long>(
            static_cast<__int128>(positive_mod(s.b[k], q_theta)) * p % q_theta);
        folded = positive_mod(folded + rot * (Q / q_theta), Q);
      }
      out.a[k] = positive_mod(folded, Q);
    }
    return out;
  }
  out.torsion_order = s.torsion_order;
  out.a = s.a;
  for (long& ak : out.a) ak = positive_mod(ak, out.torsion_order);
  out.b = s.b;
  out.theta = s.theta_real;
  require(out.theta.has_value(), Errc::InvariantViolation,
          "nonzero rotation exponents require a theta");
  return out;
}

MultiplicativeInvariants multiplicative_invariants(const EigenSpec& spec) {
  MultiplicativeInvariants inv;
  if (spec.is_exact()) {
    long q = 1;
    for (const ExactComplex& v : spec.exact_values()) {
      if (!v.is_root_of_unity()) {
        fail(Errc::UnclassifiableSpectrum,
             "eigenvalue " + v.to_string() +
                 " generates an infinite multiplicative group; no finite (l, q) exists");
      }
      q = checked_lcm(q, v.root_of_unity_order());
    }
    inv.l = 0;
    inv.q = q;
    return inv;
  }
  FoldedSpectrum f = fold_torsion(spec.symbolic_form());
  inv.l = f.has_irrational() ? 1 : 0;
  inv.q = torsion_order_of(f.a, f.torsion_order);
  return inv;
}

namespace {

// Exact resonance test on a folded symbolic spectrum:
//   lambda^i = lambda_j  <=>  sum_k b_k i_k == b_j  (irrational part)
//                        and  sum_k a_k i_k == a_j (mod Q)  (torsion part).
bool symbolic_resonant(const FoldedSpectrum& f, const MultiIndex& i, int j) {
  long asum = 0;
  long bsum = 0;
  for (size_t k = 0; k < f.a.size(); ++k) {
    asum += f.a[k] * i.e[k];
    bsum += f.b[k] * i.e[k];
  }
  if (f.has_irrational() && bsum != f.b[j]) return false;
  return positive_mod(asum - f.a[j], f.torsion_order) == 0;
}

}  // namespace

bool is_resonant_pair(const EigenSpec& spec, const MultiIndex& index, int coordinate) {
  require(index.vars() == spec.vars(), Errc::DimensionMismatch,
          "multi-index arity does not match the spectrum");
  require(coordinate >= 0 && coordinate < spec.vars(), Errc::DimensionMismatch,
          "coordinate out of range");
  require(index.degree() >= 2, Errc::DegreeOutOfRange,
          "resonance pairs require |i| >= 2");
  if (spec.is_exact()) {
    const auto& values = spec.exact_values();
    ExactComplex pow = ExactComplex::one();
    for (size_t k = 0; k < values.size(); ++k) pow = pow * values[k].pow(index.e[k]);
    return pow == values[coordinate];
  }
  FoldedSpectrum f = fold_torsion(spec.symbolic_form());
  return symbolic_resonant(f, index, coordinate);
}

ResonanceSet resonances(const EigenSpec& spec, int order) {
  require(order >= 2, Errc::DegreeOutOfRange, "resonance scan needs order >= 2");
  int n = spec.vars();
  auto space = jet_space(n, order);
  ResonanceSet out;
  out.order = order;

  if (spec.is_exact()) {
    const auto& values = spec.exact_values();
    // Incremental powers: lambda^i = lambda^{pred(i)} * lambda_v for the first variable v
    // with i_v > 0, walking monomials in table order.
    std::vector<ExactComplex> powers(space->icount(), ExactComplex::one());
    for (int idx = 1; idx < space->icount(); ++idx) {
      MultiIndex mi = space->monomial(idx);
      int v = 0;
      while (mi.e[v] == 0) ++v;
      MultiIndex pred = mi;
      pred.e[v] -= 1;
      powers[idx] = powers[space->internal_rank(pred)] * values[v];
      if (mi.degree() < 2) continue;
      for (int j = 0; j < n; ++j) {
        if (powers[idx] == values[j]) out.pairs.push_back({mi, j});
      }
    }
    return out;
  }

  FoldedSpectrum f = fold_torsion(spec.symbolic_form());
  for (int idx = 1; idx < space->icount(); ++idx) {
    MultiIndex mi = space->monomial(idx);
    if (mi.degree() < 2) continue;
    for (int j = 0; j < n; ++j) {
      if (symbolic_resonant(f, mi, j)) out.pairs.push_back({mi, j});
    }
  }
  return out;
}

std::vector<BigComplex> eigenvalues_numeric(const EigenSpec& spec, long bits) {
  std::vector<BigComplex> out;
  if (spec.is_exact()) {
    for (const ExactComplex& v : spec.exact_values()) out.push_back(BigComplex::from_exact(v, bits));
    return out;
  }
  FoldedSpectrum f = fold_torsion(spec.symbolic_form());
  long work = bits + 32;
  for (size_t k = 0; k < f.a.size(); ++k) {
    if (f.has_irrational() && f.b[k] != 0) {
      BigFloat turns = BigFloat::from_rational(Rational(f.a[k], f.torsion_order), work) +
                       f.theta->round_to(work) * BigFloat::from_long(f.b[k], work);
      out.push_back(BigComplex::unit_from_turns(turns, bits));
    } else {
      out.push_back(BigComplex::unit_from_turns(Rational(f.a[k], f.torsion_order), bits));
    }
  }
  return out;
}

EigenSpec powered_spec(const EigenSpec& spec, long q) {
  require(q >= 1, Errc::InvariantViolation, "power must be >= 1");
  if (spec.is_exact()) {
    std::vector<ExactComplex> powered;
    for (const ExactComplex& v : spec.exact_values()) powered.push_back(v.pow(q));
    return EigenSpec::exact(std::move(powered));
  }
  SymbolicSpectrum s = spec.symbolic_form();
  for (long& ak : s.a) ak = positive_mod(ak * (q % s.torsion_order), s.torsion_order);
  for (long& bk : s.b) {
    require(std::abs(bk) <= (1L << 40) / q, Errc::InvariantViolation,
            "powered rotation exponent exceeds the supported range");
    bk *= q;
  }
  return EigenSpec::symbolic(std::move(s));
}

}  // namespace jetlin
