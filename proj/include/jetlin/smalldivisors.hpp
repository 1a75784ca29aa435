#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "jetlin/rings.hpp"
#include "jetlin/spectrum.hpp"

namespace jetlin {

// A rotation number: exact rational, or an arbitrary-precision real that the
// caller declares irrational.
using ThetaValue = std::variant<Rational, BigFloat>;

// Omega(m') = min |lambda^i - lambda_j| over non-resonant pairs with
// 2 <= |i| <= m'.  Exactly-resonant pairs are excluded (flagged), never
// reported as tiny floats; if every pair is resonant the entry is +inf.
struct OmegaEntry {
  int order = 0;
  BigFloat omega;
  bool has_exact_resonance = false;
  std::optional<ResonantPair> attained_at;
};

struct SmallDivisorProfile {
  long bits = 0;
  std::vector<OmegaEntry> table;  // orders 2..m, cumulative minima
};

SmallDivisorProfile omega_profile(const EigenSpec& spec, int order, long bits);
OmegaEntry omega_min(const EigenSpec& spec, int order, long bits);

// min over 1 <= k <= M of |e^{2 pi i k theta} - 1|; exactly zero (with the
// witness k recorded) iff theta is rational with denominator <= M.
struct ScalarOmega {
  BigFloat value;
  std::optional<long> zero_at;
};
ScalarOmega scalar_omega(const ThetaValue& theta, long index_bound, long bits);

// Bruno sum over continued-fraction convergent denominators:
//   B = sum_k log(q_{k+1}) / q_k.
// The scan runs past the requested cutoff (up to max(2*cutoff, 128)) until a
// verdict fires: ExceededBound at the first increment pushing B above the
// bound, else ConvergedAtCutoff at the first increment below 2^{-20}.
// Rational thetas short-circuit to RationalTheta with their finite convergent
// list.  Digits that cannot be certified at the working precision raise
// PrecisionExhausted.
struct BrunoVerdict {
  enum class Kind { ConvergedAtCutoff, ExceededBound, RationalTheta };
  Kind kind = Kind::ConvergedAtCutoff;
  long at_k = 0;  // index of the increment (or last convergent for RationalTheta)
};

struct BrunoReport {
  long requested_cutoff = 0;
  long bits = 0;
  BigFloat bound;
  std::vector<Integer> digits;                           // partial quotients a_k
  std::vector<std::pair<Integer, Integer>> convergents;  // (p_k, q_k)
  std::vector<BigFloat> partial_sums;                    // B after increment k
  BrunoVerdict verdict;
};

BrunoReport bruno_check(const ThetaValue& theta, long cutoff, const BigFloat& bound, long bits);

// One-sided comparison Omega_{q*alpha}(m) <= q * Omega_alpha(m) + 2^{4-bits};
// `certified` reports whether the computed values satisfy it.
struct TorsionComparison {
  long q = 1;
  OmegaEntry omega_base;
  OmegaEntry omega_powered;
  BigFloat tolerance;
  bool certified = false;
};
TorsionComparison torsion_compare(const EigenSpec& spec, long q, int order, long bits);

// For torsion-free symbolic spectra (q_eps = 1, theta irrational): every
// divisor is |e^{2 pi i k theta} - 1| with 0 < |k| <= (m+1)*max|b|, so
// Omega(m) >= scalar_omega(theta, (m+1)*max|b|) - 2^{4-bits}.
struct BaseReductionReport {
  OmegaEntry omega;
  ScalarOmega scalar;
  long index_bound = 0;
  BigFloat tolerance;
  bool holds = false;
};
BaseReductionReport base_reduction_check(const EigenSpec& spec, int order, long bits);

}  // namespace jetlin
