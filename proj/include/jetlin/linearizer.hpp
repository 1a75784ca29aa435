#pragma once

#include <optional>
#include <vector>

#include "jetlin/centralizer.hpp"
#include "jetlin/jets.hpp"
#include "jetlin/linalg.hpp"
#include "jetlin/rings.hpp"
#include "jetlin/spectrum.hpp"

namespace jetlin {

// ---------------------------------------------------------------------------
// linearize: solve f o h = h o A degree by degree, where A is the linear part
// of f (so pi_m(h^{-1} o f o h) = A).  At each degree d the unknown slice u_d
// satisfies  (u_d o A - A o u_d) = [f o h_{<d} - h_{<d} o A]_d ; non-resonant
// slots are forced, resonant (free) slots are taken from `s` in slot order.
// The reported obstruction is the first inconsistent residual of the conjugacy
// identity; it is independent of the choice of s (changing earlier free slots
// composes the residual with a commuting germ, which fixes its lowest degree).
// ---------------------------------------------------------------------------

struct Obstruction {
  int degree = 0;
  MultiIndex index;
  int coordinate = 0;  // 0-based
  ExactComplex value;  // residual of the conjugacy identity at that slot
};

struct LinearizationResult {
  enum class Status { Linearized, Obstructed };

  explicit LinearizationResult(ExactGerm germ) : h(std::move(germ)) {}

  Status status = Status::Linearized;
  ExactGerm h;                          // valid below the obstructed degree
  std::vector<ResonantPair> free_slots; // slots filled from s (or zero), in order
  std::optional<Obstruction> obstruction;
};

LinearizationResult linearize(const ExactGerm& f, int order,
                              const std::vector<ExactComplex>& s = {});

// h_s = pi_m(h_0 o psi_A(s)) where h_0 = linearize(f, m, 0).h; every h_s solves
// the same conjugacy problem, and h_{s1}^{-1} o h_{s2} commutes with A.
ExactGerm normalization_family(const ExactGerm& f, int order,
                               const std::vector<ExactComplex>& s);

// ---------------------------------------------------------------------------
// family_linearize: one-parameter families.  Solves h_t o f_t = A o h_t over
// the polynomial ring C[t], with the resonant slots pinned to zero.  The
// linear part of f_t must be parameter-independent.  If a resonant slot has a
// nonzero residual the family is obstructed and the offending polynomial is
// the witness.
// ---------------------------------------------------------------------------

struct ParamObstruction {
  int degree = 0;
  MultiIndex index;
  int coordinate = 0;
  ExactParamPoly witness;  // residual of the conjugacy identity at that slot
};

class FamilyObstructedError : public Error {
 public:
  FamilyObstructedError(ParamObstruction witness, const std::string& detail)
      : Error(Errc::FamilyObstructed, detail), witness_(std::move(witness)) {}
  const ParamObstruction& witness() const { return witness_; }

 private:
  ParamObstruction witness_;
};

struct DegreeReportEntry {
  MultiIndex index;
  long deg_t = 0;  // max over coordinates of the t-degree of the coefficient
};

struct FamilyLinearization {
  ParamGerm h_t;
  long d0 = 0;  // max t-degree over the coefficients of f_t
  std::vector<DegreeReportEntry> degree_report;  // monomials with nonzero coefficients
};

FamilyLinearization family_linearize(const ParamGerm& f_t, int order);

// ---------------------------------------------------------------------------
// Averaging over a torsion linear part: k0 = (1/q) * sum_{i<q} A^{-i} o k o f^i.
// Requires A^q = id exactly (TorsionMismatch) and pi_m(k o f^q) = pi_m(k)
// (PreconditionFailed); then pi_m(k0 o f) = pi_m(A o k0).
// ---------------------------------------------------------------------------

ExactGerm average_linearization(const ExactGerm& f, long q, const ExactGerm& k, int order);

// ---------------------------------------------------------------------------
// Finite-order linearizability test for exact germs with diagonal linear part
// whose eigenvalues are roots of unity in Q(i) ({1,-1,i,-i}): with q the lcm of
// the eigenvalue orders, f is linearizable iff pi_m(f^q) = id, and averaging
// k = id produces an exact witness.  Other exact linear parts are
// SpectrumUnsupported; inexact coefficient rings are Inconclusive (handled at
// the API layer, where the germ's ring is known).
// ---------------------------------------------------------------------------

enum class FiniteOrderVerdict { LinearizableWitness, NotLinearizable, Inconclusive };

struct FiniteOrderResult {
  FiniteOrderVerdict verdict = FiniteOrderVerdict::Inconclusive;
  long q = 1;
  std::optional<ExactGerm> witness;  // exact linearizer when LinearizableWitness
};

FiniteOrderResult finite_order_test(const ExactGerm& f, int order);

// ---------------------------------------------------------------------------
// Embed a one-variable jet phi (valuation >= 2) along an eigendirection of A:
// the germ A(z) + phi(z_axis)*e_axis, which restricts to z -> lambda*z + phi(z)
// on the invariant axis.  Requires column `axis` of A to be lambda*e_axis.
// ---------------------------------------------------------------------------

ExactGerm embed_axis_map(const Matrix<ExactComplex>& linear, int axis,
                         const ExactScalarJet& phi, int order);

}  // namespace jetlin
