#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "jetlin/jets.hpp"
#include "jetlin/rings.hpp"

namespace jetlin {

// Symbolic description of a tuple of unit-modulus eigenvalues
//
//   lambda_k = eps^{a_k} * mu^{b_k},   eps = e^{2*pi*i/torsion_order},  mu = e^{2*pi*i*theta},
//
// where theta is either an exact rational or an arbitrary-precision real that the caller
// declares irrational.  This split keeps "is this divisor exactly zero?" decidable: the
// torsion part is exact integer arithmetic and the irrational part contributes zero only
// when its integer combination vanishes.
struct SymbolicSpectrum {
  long torsion_order = 1;                  // q_eps >= 1
  std::vector<long> a;                     // torsion exponents, one per coordinate
  std::vector<long> b;                     // irrational exponents, one per coordinate
  std::optional<Rational> theta_rational;  // exactly one of these two is set when any b_k != 0
  std::optional<BigFloat> theta_real;      // declared irrational by the caller

  int vars() const { return static_cast<int>(a.size()); }
  void validate() const;
};

// Canonical form after folding a rational theta into the torsion part: either the
// spectrum is pure torsion (theta absent, all b zero) or theta is declared irrational.
struct FoldedSpectrum {
  long torsion_order = 1;          // Q
  std::vector<long> a;             // exponents mod Q
  std::vector<long> b;             // all zero unless theta is present
  std::optional<BigFloat> theta;   // present iff declared irrational and some b_k != 0

  bool has_irrational() const { return theta.has_value(); }
  int vars() const { return static_cast<int>(a.size()); }
};

// Eigenvalue specification: either exact Gaussian-rational values or a symbolic
// unit-modulus description.
class EigenSpec {
 public:
  static EigenSpec exact(std::vector<ExactComplex> values);
  static EigenSpec symbolic(SymbolicSpectrum s);

  bool is_exact() const { return std::holds_alternative<std::vector<ExactComplex>>(rep_); }
  int vars() const;
  const std::vector<ExactComplex>& exact_values() const;
  const SymbolicSpectrum& symbolic_form() const;

 private:
  std::variant<std::vector<ExactComplex>, SymbolicSpectrum> rep_;
};

// Fold a rational theta into the torsion subgroup; identity on already-folded input.
FoldedSpectrum fold_torsion(const SymbolicSpectrum& s);

// (l, q): l = 1 iff an irrational rotation survives folding, else 0; q = multiplicative
// order of the torsion part (smallest q >= 1 killing every torsion exponent).  Exact
// specs are classifiable only when every eigenvalue is a root of unity in Q(i), i.e. in
// {1, -1, i, -i}; otherwise UnclassifiableSpectrum.
struct MultiplicativeInvariants {
  int l = 0;
  long q = 1;
};
MultiplicativeInvariants multiplicative_invariants(const EigenSpec& spec);

// A resonance is a pair (i, j) with |i| >= 2 and lambda^i = lambda_j exactly.
// `coordinate` is 0-based internally; serialization layers shift to 1-based.
struct ResonantPair {
  MultiIndex index;
  int coordinate = 0;
};

struct ResonanceSet {
  int order = 0;                    // multi-indices scanned up to |i| <= order
  std::vector<ResonantPair> pairs;  // sorted by (|i|, graded-lex rank, coordinate)
};

ResonanceSet resonances(const EigenSpec& spec, int order);
bool is_resonant_pair(const EigenSpec& spec, const MultiIndex& index, int coordinate);

// Numeric eigenvalues at the requested precision (exact values are embedded; symbolic
// values are exp(2*pi*i*turns) with guard bits on the turn computation).
std::vector<BigComplex> eigenvalues_numeric(const EigenSpec& spec, long bits);

// The spec whose eigenvalues are the q-th powers of this one's.
EigenSpec powered_spec(const EigenSpec& spec, long q);

}  // namespace jetlin
