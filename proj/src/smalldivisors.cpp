#include "jetlin/smalldivisors.hpp"

#include <algorithm>

#include "jetlin/errors.hpp"
#include "jetlin/jets.hpp"

namespace jetlin {

namespace {

constexpr long kGuardBits = 64;

// Smallest-divisor certification threshold: a numeric minimum below this
// cannot be told apart from an uncertified resonance.
BigFloat certification_floor(long bits) { return BigFloat::two_to(-bits - 32, 64); }

struct RunningMin {
  std::optional<BigFloat> best;
  std::optional<ResonantPair> pair;

  void offer(BigFloat v, const MultiIndex& mi, int j) {
    if (!best || v < *best) {
      best = std::move(v);
      pair = ResonantPair{mi, j};
    }
  }
};

}  // namespace

SmallDivisorProfile omega_profile(const EigenSpec& spec, int order, long bits) {
  require(order >= 2, Errc::DegreeOutOfRange, "divisor profile needs order >= 2");
  require(bits >= BigFloat::kMinPrecision, Errc::PrecisionTooLow,
          "at least 53 bits of precision are required");
  const int n = spec.vars();
  auto space = jet_space(n, order);
  SmallDivisorProfile out;
  out.bits = bits;
  const long wbits = bits + kGuardBits;

  bool any_resonance = false;

  if (spec.is_exact()) {
    const auto& values = spec.exact_values();
    std::vector<ExactComplex> powers(static_cast<size_t>(space->icount()), ExactComplex::one());
    std::optional<Rational> best2;  // |lambda^i - lambda_j|^2, exact
    std::optional<ResonantPair> best_pair;
    int next_degree = 2;
    for (int idx = 1; idx < space->icount(); ++idx) {
      const MultiIndex& mi = space->monomial(idx);
      int v = 0;
      while (mi.e[v] == 0) ++v;
      MultiIndex pred = mi;
      pred.e[v] -= 1;
      powers[idx] = powers[space->internal_rank(pred)] * values[v];
      const int d = mi.degree();
      if (d < 2) continue;
      while (next_degree < d) {
        OmegaEntry entry;
        entry.order = next_degree;
        entry.omega = best2 ? BigFloat::from_rational(*best2, wbits).sqrt().round_to(bits)
                            : BigFloat::infinity(bits);
        entry.has_exact_resonance = any_resonance;
        entry.attained_at = best_pair;
        out.table.push_back(std::move(entry));
        ++next_degree;
      }
      for (int j = 0; j < n; ++j) {
        ExactComplex diff = powers[idx] - values[j];
        if (diff.is_zero()) {
          any_resonance = true;
          continue;
        }
        Rational d2 = diff.norm2();
        if (!best2 || d2 < *best2) {
          best2 = std::move(d2);
          best_pair = ResonantPair{mi, j};
        }
      }
    }
    for (; next_degree <= order; ++next_degree) {
      OmegaEntry entry;
      entry.order = next_degree;
      entry.omega = best2 ? BigFloat::from_rational(*best2, wbits).sqrt().round_to(bits)
                          : BigFloat::infinity(bits);
      entry.has_exact_resonance = any_resonance;
      entry.attained_at = best_pair;
      out.table.push_back(std::move(entry));
    }
    return out;
  }

  std::vector<BigComplex> values = eigenvalues_numeric(spec, wbits);
  std::vector<BigComplex> powers(static_cast<size_t>(space->icount()),
                                 BigComplex::from_exact(ExactComplex::one(), wbits));
  RunningMin running;
  int next_degree = 2;
  auto emit_upto = [&](int upto) {
    while (next_degree <= upto) {
      OmegaEntry entry;
      entry.order = next_degree;
      if (running.best) {
        require(!(*running.best < certification_floor(bits)), Errc::PrecisionTooLow,
                "smallest divisor cannot be certified nonzero at " + std::to_string(bits) +
                    " bits");
        entry.omega = running.best->round_to(bits);
      } else {
        entry.omega = BigFloat::infinity(bits);
      }
      entry.has_exact_resonance = any_resonance;
      entry.attained_at = running.pair;
      out.table.push_back(std::move(entry));
      ++next_degree;
    }
  };

  for (int idx = 1; idx < space->icount(); ++idx) {
    const MultiIndex& mi = space->monomial(idx);
    int v = 0;
    while (mi.e[v] == 0) ++v;
    MultiIndex pred = mi;
    pred.e[v] -= 1;
    powers[idx] = powers[space->internal_rank(pred)] * values[v];
    const int d = mi.degree();
    if (d < 2) continue;
    emit_upto(d - 1);
    for (int j = 0; j < n; ++j) {
      bool resonant = is_resonant_pair(spec, mi, j);
      if (resonant) {
        any_resonance = true;
        continue;
      }
      running.offer((powers[idx] - values[j]).abs(), mi, j);
    }
  }
  emit_upto(order);
  return out;
}

OmegaEntry omega_min(const EigenSpec& spec, int order, long bits) {
  return omega_profile(spec, order, bits).table.back();
}

ScalarOmega scalar_omega(const ThetaValue& theta, long index_bound, long bits) {
  require(index_bound >= 1, Errc::InvariantViolation, "index bound must be >= 1");
  require(index_bound <= (1L << 24), Errc::InvariantViolation,
          "index bound exceeds the supported range");
  require(bits >= BigFloat::kMinPrecision, Errc::PrecisionTooLow,
          "at least 53 bits of precision are required");

  if (std::holds_alternative<Rational>(theta)) {
    Rational t = std::get<Rational>(theta);
    t.canonicalize();
    Integer den = t.get_den();
    if (den.fits_slong_p() && den.get_si() <= index_bound) {
      ScalarOmega out{BigFloat::from_long(0, bits), den.get_si()};
      return out;
    }
    // Exact minimization: |e^{2 pi i k theta} - 1| = 2 sin(pi * dist(k*theta, Z)),
    // and dist is an exact rational comparison.
    std::optional<Rational> best_dist;
    Rational frac = t - Rational(Integer(t.get_num() / t.get_den()));
    if (frac < 0) frac += 1;
    Rational cur(0);
    for (long k = 1; k <= index_bound; ++k) {
      cur += frac;
      if (cur >= 1) cur -= 1;
      Rational complement = Rational(1) - cur;
      Rational dist = std::min(cur, complement);
      if (!best_dist || dist < *best_dist) best_dist = dist;
    }
    const long wbits = bits + kGuardBits;
    BigFloat angle = BigFloat::pi(wbits) * BigFloat::from_rational(*best_dist, wbits);
    ScalarOmega out{(angle.sin() * BigFloat::from_long(2, wbits)).round_to(bits), std::nullopt};
    return out;
  }

  const BigFloat& t = std::get<BigFloat>(theta);
  const long wbits = std::max(t.precision(), bits) + kGuardBits + 24;
  BigFloat step = t.round_to(wbits);
  BigFloat cur = BigFloat::from_long(0, wbits);
  std::optional<BigFloat> best_dist;
  const BigFloat one = BigFloat::from_long(1, wbits);
  for (long k = 1; k <= index_bound; ++k) {
    cur = cur + step;
    BigFloat frac = cur - cur.floor();
    cur = frac;  // keep the accumulator in [0,1) so absolute error stays bounded
    BigFloat dist = frac < (one - frac) ? frac : one - frac;
    if (!best_dist || dist < *best_dist) best_dist = dist;
  }
  require(!(*best_dist < certification_floor(bits)), Errc::PrecisionTooLow,
          "scalar divisor cannot be certified nonzero at " + std::to_string(bits) + " bits");
  BigFloat angle = BigFloat::pi(wbits) * *best_dist;
  return ScalarOmega{(angle.sin() * BigFloat::from_long(2, wbits)).round_to(bits), std::nullopt};
}

namespace {

// Continued-fraction state shared by the rational and real Bruno scans.
struct BrunoScan {
  BigFloat bound;
  BigFloat epsilon;   // pinned tail threshold 2^{-20}
  long wbits;
  BigFloat b_sum;
  std::optional<BrunoVerdict> verdict;
  BrunoReport* report;

  BrunoScan(const BigFloat& m, long work_bits, BrunoReport* rep)
      : bound(m),
        epsilon(BigFloat::two_to(-20, 64)),
        wbits(work_bits),
        b_sum(BigFloat::from_long(0, work_bits)),
        report(rep) {}

  // Called once the (k+1)-st convergent denominator is known; returns true
  // when a verdict fired.
  bool push_increment(long k, const Integer& q_k, const Integer& q_next) {
    BigFloat inc = BigFloat::from_integer(q_next, wbits).log() /
                   BigFloat::from_integer(q_k, wbits);
    b_sum = b_sum + inc;
    report->partial_sums.push_back(b_sum.round_to(report->bits));
    if (bound < b_sum) {
      verdict = BrunoVerdict{BrunoVerdict::Kind::ExceededBound, k};
      return true;
    }
    if (inc < epsilon) {
      verdict = BrunoVerdict{BrunoVerdict::Kind::ConvergedAtCutoff, k};
      return true;
    }
    return false;
  }
};

}  // namespace

BrunoReport bruno_check(const ThetaValue& theta, long cutoff, const BigFloat& bound, long bits) {
  require(cutoff >= 1, Errc::DegreeOutOfRange, "cutoff must be >= 1");
  require(cutoff <= 4096, Errc::DegreeOutOfRange, "cutoff exceeds the supported range");
  require(bound.is_finite() && !bound.is_negative() && !bound.is_zero(),
          Errc::InvariantViolation, "bound must be a positive finite value");
  require(bits >= BigFloat::kMinPrecision, Errc::PrecisionTooLow,
          "at least 53 bits of precision are required");

  BrunoReport report;
  report.requested_cutoff = cutoff;
  report.bits = bits;
  report.bound = bound.round_to(bits);
  const long wbits = bits + kGuardBits;

  Integer p_prev(1), q_prev(0), p_cur(0), q_cur(1);  // conventions: p_0/q_0 = 0/1
  auto push_digit = [&](const Integer& a) {
    Integer p_next = a * p_cur + p_prev;
    Integer q_next = a * q_cur + q_prev;
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
    p_cur = std::move(p_next);
    q_cur = std::move(q_next);
    report.digits.push_back(a);
    report.convergents.emplace_back(p_cur, q_cur);
  };

  if (std::holds_alternative<Rational>(theta)) {
    Rational t = std::get<Rational>(theta);
    t.canonicalize();
    // Only the fractional part matters for e^{2 pi i theta}.
    Integer num = t.get_num() % t.get_den();
    if (num < 0) num += t.get_den();
    Integer den = t.get_den();
    BrunoScan scan(bound, wbits, &report);
    // Euclid on (den, num): quotients are the partial quotients of num/den.
    Integer a_hi = den, a_lo = num;
    while (a_lo != 0) {
      Integer digit = a_hi / a_lo;
      Integer rem = a_hi % a_lo;
      push_digit(digit);
      const size_t count = report.convergents.size();
      if (count >= 2) {
        scan.push_increment(static_cast<long>(count) - 1,
                            report.convergents[count - 2].second,
                            report.convergents[count - 1].second);
      }
      a_hi = std::move(a_lo);
      a_lo = std::move(rem);
    }
    report.verdict =
        BrunoVerdict{BrunoVerdict::Kind::RationalTheta,
                     static_cast<long>(report.convergents.size())};
    return report;
  }

  const BigFloat& t = std::get<BigFloat>(theta);
  const long hard_cap = std::max(2 * cutoff, 128L);
  const long xprec = std::max(t.precision(), wbits);
  BigFloat x = t.round_to(xprec);
  x = x - x.floor();  // fractional part
  long err_e = -t.precision() + 2;  // absolute error exponent of x
  BrunoScan scan(bound, wbits, &report);

  for (long k = 1; k <= hard_cap; ++k) {
    if (x.is_zero() || x.is_negative()) {
      fail(Errc::PrecisionExhausted,
           "expansion terminated at digit " + std::to_string(k) +
               "; the value is indistinguishable from a rational at this precision");
    }
    BigFloat inv = BigFloat::from_long(1, xprec) / x;
    long exp_inv = inv.exponent();
    err_e = std::max(err_e + 2 * std::max(exp_inv, 1L) + 2, exp_inv - xprec + 2);
    BigFloat frac = inv - inv.floor();
    BigFloat tol = BigFloat::two_to(std::min(err_e + 2, 0L), 64);
    if (err_e + 2 >= 0 || frac < tol || (BigFloat::from_long(1, xprec) - frac) < tol) {
      fail(Errc::PrecisionExhausted,
           "continued-fraction digit " + std::to_string(k) +
               " cannot be certified at this precision (error exponent " +
               std::to_string(err_e) + ")");
    }
    push_digit(inv.to_integer_floor());
    const size_t count = report.convergents.size();
    if (count >= 2 &&
        scan.push_increment(static_cast<long>(count) - 1, report.convergents[count - 2].second,
                            report.convergents[count - 1].second)) {
      report.verdict = *scan.verdict;
      return report;
    }
    x = frac;
  }
  fail(Errc::PrecisionExhausted,
       "no verdict within " + std::to_string(hard_cap) + " digits: the partial sums neither "
       "exceeded the bound nor converged below the tail threshold");
}

TorsionComparison torsion_compare(const EigenSpec& spec, long q, int order, long bits) {
  require(q >= 1, Errc::InvariantViolation, "power must be >= 1");
  TorsionComparison out{q, omega_min(spec, order, bits),
                        omega_min(powered_spec(spec, q), order, bits),
                        BigFloat::two_to(4 - bits, 64), false};
  BigFloat rhs = BigFloat::from_long(q, bits + kGuardBits) * out.omega_base.omega + out.tolerance;
  out.certified = !(rhs < out.omega_powered.omega);
  return out;
}

BaseReductionReport base_reduction_check(const EigenSpec& spec, int order, long bits) {
  require(!spec.is_exact(), Errc::SpectrumUnsupported,
          "base reduction applies to symbolic spectra");
  FoldedSpectrum folded = fold_torsion(spec.symbolic_form());
  require(folded.torsion_order == 1, Errc::SpectrumUnsupported,
          "base reduction needs a torsion-free spectrum");
  require(folded.has_irrational(), Errc::SpectrumUnsupported,
          "base reduction needs an irrational rotation number");
  long maxb = 0;
  for (long bk : folded.b) maxb = std::max(maxb, std::abs(bk));
  require(maxb >= 1, Errc::SpectrumUnsupported,
          "base reduction needs at least one nonzero rotation exponent");

  BaseReductionReport out{omega_min(spec, order, bits),
                          ScalarOmega{BigFloat::from_long(0), std::nullopt},
                          (order + 1) * maxb, BigFloat::two_to(4 - bits, 64), false};
  out.scalar = scalar_omega(ThetaValue{*folded.theta}, out.index_bound, bits);
  out.holds = !(out.omega.omega < out.scalar.value - out.tolerance);
  return out;
}

}  // namespace jetlin
