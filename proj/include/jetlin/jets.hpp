#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jetlin/errors.hpp"
#include "jetlin/linalg.hpp"
#include "jetlin/rings.hpp"

namespace jetlin {

// ---------------------------------------------------------------------------
// Monomials and the shared per-(n, m) index tables.
// ---------------------------------------------------------------------------

struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps) : e(std::move(exps)) {}

  int vars() const { return static_cast<int>(e.size()); }
  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool operator==(const MultiIndex& o) const { return e == o.e; }
  bool operator!=(const MultiIndex& o) const { return e != o.e; }

  std::string to_string() const {
    std::string out = "(";
    for (size_t k = 0; k < e.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(e[k]);
    }
    return out + ")";
  }
};

struct MultiIndexHash {
  size_t operator()(const MultiIndex& i) const {
    size_t h = 1469598103934665603ull;
    for (int x : i.e) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Monomial tables for jets in n variables truncated at total degree m.
// Monomial order: total degree ascending; within a degree, exponent tuples
// in lexicographically descending order, so for n = 2, m = 2 the ranked
// monomials are (1,0), (0,1), (2,0), (1,1), (0,2).
//
// Internally the table also holds the degree-0 monomial at index 0; the
// public rank (as used in reports and slot orderings) starts at the first
// degree-1 monomial, i.e. rank = internal index - 1.
class JetSpace {
 public:
  JetSpace(int vars, int order);

  int vars() const { return n_; }
  int order() const { return m_; }

  // Internal table, degrees 0..m.
  int icount() const { return static_cast<int>(monomials_.size()); }
  const MultiIndex& monomial(int internal_index) const { return monomials_[internal_index]; }
  int degree_of(int internal_index) const { return degrees_[internal_index]; }
  // First internal index of degree d (d in 0..m+1; m+1 gives icount()).
  int degree_offset(int d) const { return offsets_[d]; }
  int homogeneous_count(int d) const { return offsets_[d + 1] - offsets_[d]; }

  // Internal index of a monomial; requires matching arity and degree <= m.
  int internal_rank(const MultiIndex& i) const;
  bool contains(const MultiIndex& i) const;

  // Public rank over monomials of degree 1..m (degree-0 is not ranked).
  int rank(const MultiIndex& i) const;
  const MultiIndex& monomial_at_rank(int rank) const { return monomials_[rank + 1]; }

  // Dimension counters.
  int monomial_count() const { return icount() - 1; }      // degrees 1..m
  long map_dimension() const {                             // coefficients of a germ
    return static_cast<long>(n_) * monomial_count();
  }
  long tangent_identity_dimension() const {                // germs with linear part id
    return static_cast<long>(n_) * (monomial_count() - n_);
  }

  // Coefficient slots of homogeneous degree d, ordered monomial-major then
  // coordinate: slot = local_monomial_rank * n + coordinate.
  int slot_count(int d) const { return homogeneous_count(d) * n_; }
  std::pair<MultiIndex, int> slot_decode(int d, int slot) const;

 private:
  int n_, m_;
  std::vector<MultiIndex> monomials_;
  std::vector<int> degrees_;
  std::vector<int> offsets_;
  std::unordered_map<MultiIndex, int, MultiIndexHash> index_;
};

// Shared, cached table for a given (vars, order).
std::shared_ptr<const JetSpace> jet_space(int vars, int order);

// ---------------------------------------------------------------------------
// ScalarJet<T>: one truncated power series.  Value type; operations are pure.
// ---------------------------------------------------------------------------

template <class T>
class ScalarJet {
 public:
  explicit ScalarJet(std::shared_ptr<const JetSpace> space)
      : space_(std::move(space)), c_(static_cast<size_t>(space_->icount())) {}

  static ScalarJet constant(std::shared_ptr<const JetSpace> space, T value) {
    ScalarJet j(std::move(space));
    j.c_[0] = std::move(value);
    return j;
  }

  static ScalarJet coordinate(std::shared_ptr<const JetSpace> space, int var) {
    ScalarJet j(std::move(space));
    require(var >= 0 && var < j.space_->vars(), Errc::DimensionMismatch,
            "coordinate index out of range");
    std::vector<int> e(static_cast<size_t>(j.space_->vars()), 0);
    e[var] = 1;
    j.c_[j.space_->internal_rank(MultiIndex(std::move(e)))] = ring_one<T>();
    return j;
  }

  const std::shared_ptr<const JetSpace>& space_ptr() const { return space_; }
  const JetSpace& space() const { return *space_; }

  const T& coeff_internal(int idx) const { return c_[idx]; }
  const T& coeff(const MultiIndex& i) const { return c_[space_->internal_rank(i)]; }
  void set_coeff(const MultiIndex& i, T value) { c_[space_->internal_rank(i)] = std::move(value); }
  void set_coeff_internal(int idx, T value) { c_[idx] = std::move(value); }
  void add_coeff_internal(int idx, const T& value) { c_[idx] += value; }

  bool is_zero() const {
    for (const T& x : c_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  // Lowest degree with a nonzero coefficient; order()+1 when zero.
  int valuation() const {
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
      if (!ring_is_zero(c_[k])) return space_->degree_of(k);
    return space_->order() + 1;
  }

  bool operator==(const ScalarJet& o) const {
    return compatible(o) && c_ == o.c_;
  }
  bool operator!=(const ScalarJet& o) const { return !(*this == o); }

  ScalarJet operator-() const {
    ScalarJet r(space_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
  }

  ScalarJet operator+(const ScalarJet& o) const {
    check_compatible(o);
    ScalarJet r(space_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }

  ScalarJet operator-(const ScalarJet& o) const {
    check_compatible(o);
    ScalarJet r(space_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }

  ScalarJet scaled(const T& s) const {
    ScalarJet r(space_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * s;
    return r;
  }

  // Truncated product.
  ScalarJet operator*(const ScalarJet& o) const {
    check_compatible(o);
    ScalarJet r(space_);
    const int m = space_->order();
    std::vector<int> nz_a, nz_b;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
      if (!ring_is_zero(c_[k])) nz_a.push_back(k);
    for (int k = 0; k < static_cast<int>(o.c_.size()); ++k)
      if (!ring_is_zero(o.c_[k])) nz_b.push_back(k);
    MultiIndex sum;
    sum.e.resize(static_cast<size_t>(space_->vars()));
    for (int ia : nz_a) {
      const int da = space_->degree_of(ia);
      const MultiIndex& ma = space_->monomial(ia);
      for (int ib : nz_b) {
        if (da + space_->degree_of(ib) > m) continue;
        const MultiIndex& mb = space_->monomial(ib);
        for (size_t v = 0; v < sum.e.size(); ++v) sum.e[v] = ma.e[v] + mb.e[v];
        r.c_[space_->internal_rank(sum)] += c_[ia] * o.c_[ib];
      }
    }
    return r;
  }

  ScalarJet& operator+=(const ScalarJet& o) { return *this = *this + o; }
  ScalarJet& operator-=(const ScalarJet& o) { return *this = *this - o; }

  ScalarJet homogeneous_part(int d) const {
    require(d >= 0 && d <= space_->order(), Errc::DegreeOutOfRange,
            "homogeneous part degree out of range");
    ScalarJet r(space_);
    for (int k = space_->degree_offset(d); k < space_->degree_offset(d + 1); ++k) r.c_[k] = c_[k];
    return r;
  }

  // Copy into a lower-order space.
  ScalarJet projected(const std::shared_ptr<const JetSpace>& target) const {
    require(target->vars() == space_->vars(), Errc::DimensionMismatch,
            "projection changes variable count");
    require(target->order() <= space_->order(), Errc::OrderIncrease,
            "projection cannot raise the truncation order");
    ScalarJet r(target);
    for (int k = 0; k < target->icount(); ++k) r.c_[k] = c_[k];
    return r;
  }

 private:
  bool compatible(const ScalarJet& o) const {
    return space_->vars() == o.space_->vars() && space_->order() == o.space_->order();
  }
  void check_compatible(const ScalarJet& o) const {
    require(compatible(o), Errc::DimensionMismatch, "jets live in different spaces");
  }

  std::shared_ptr<const JetSpace> space_;
  std::vector<T> c_;  // indexed by internal monomial rank (degree 0 included)
};

// ---------------------------------------------------------------------------
// GermJet<T>: n-tuple of scalar jets with zero constant part; the linear
// part is kept as a matrix alongside the coefficients.
// ---------------------------------------------------------------------------

template <class T>
class GermJet {
 public:
  GermJet(std::shared_ptr<const JetSpace> space, std::vector<ScalarJet<T>> components)
      : space_(std::move(space)), comps_(std::move(components)), linear_(space_->vars(), space_->vars()) {
    const int n = space_->vars();
    require(static_cast<int>(comps_.size()) == n, Errc::DimensionMismatch,
            "germ needs one component per variable");
    for (int j = 0; j < n; ++j) {
      require(comps_[j].space().vars() == n && comps_[j].space().order() == space_->order(),
              Errc::DimensionMismatch, "component jet lives in the wrong space");
      require(ring_is_zero(comps_[j].coeff_internal(0)), Errc::InvariantViolation,
              "germ component has a nonzero constant term");
    }
    // Linear part, stored redundantly for direct access: row j = d(comp j).
    for (int j = 0; j < n; ++j)
      for (int v = 0; v < n; ++v) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[v] = 1;
        linear_.at(j, v) = comps_[j].coeff(MultiIndex(std::move(e)));
      }
  }

  static GermJet identity(std::shared_ptr<const JetSpace> space) {
    return from_linear(space, Matrix<T>::identity(space->vars()));
  }

  static GermJet from_linear(std::shared_ptr<const JetSpace> space, const Matrix<T>& a) {
    const int n = space->vars();
    require(a.rows() == n && a.cols() == n, Errc::DimensionMismatch,
            "linear part has the wrong shape");
    std::vector<ScalarJet<T>> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      ScalarJet<T> c(space);
      for (int v = 0; v < n; ++v) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[v] = 1;
        c.set_coeff(MultiIndex(std::move(e)), a.at(j, v));
      }
      comps.push_back(std::move(c));
    }
    return GermJet(space, std::move(comps));
  }

  // Jet map with a single monomial coefficient (zero linear part); add to
  // identity() to build tangent-to-identity germs slot by slot.
  static GermJet monomial_slice(std::shared_ptr<const JetSpace> space, const MultiIndex& i,
                                int coordinate, T value) {
    const int n = space->vars();
    require(coordinate >= 0 && coordinate < n, Errc::DimensionMismatch,
            "slice coordinate out of range");
    require(i.degree() >= 1, Errc::DegreeOutOfRange, "slice monomial must have degree >= 1");
    std::vector<ScalarJet<T>> comps(static_cast<size_t>(n), ScalarJet<T>(space));
    comps[coordinate].set_coeff(i, std::move(value));
    return GermJet(space, std::move(comps));
  }

  const std::shared_ptr<const JetSpace>& space_ptr() const { return space_; }
  const JetSpace& space() const { return *space_; }
  int vars() const { return space_->vars(); }
  int order() const { return space_->order(); }

  const ScalarJet<T>& component(int j) const { return comps_[j]; }
  const Matrix<T>& linear_part() const { return linear_; }
  bool linear_is_identity() const { return linear_.is_identity(); }

  T coeff(int coordinate, const MultiIndex& i) const {
    return comps_[coordinate].coeff(i);
  }

  // The nonlinear remainder N with f = A + N (N has valuation >= 2).
  GermJet nonlinear_part() const {
    std::vector<ScalarJet<T>> comps;
    comps.reserve(comps_.size());
    const int off2 = space_->degree_offset(std::min(2, space_->order() + 1));
    for (const auto& c : comps_) {
      ScalarJet<T> nc(space_);
      for (int k = off2; k < space_->icount(); ++k) nc.set_coeff_internal(k, c.coeff_internal(k));
      comps.push_back(std::move(nc));
    }
    return GermJet(space_, std::move(comps));
  }

  bool operator==(const GermJet& o) const {
    if (vars() != o.vars() || order() != o.order()) return false;
    for (size_t j = 0; j < comps_.size(); ++j)
      if (comps_[j] != o.comps_[j]) return false;
    return true;
  }
  bool operator!=(const GermJet& o) const { return !(*this == o); }

  // Coefficientwise combinations (used by averaging; note the result of an
  // addition is a jet map, not necessarily an invertible germ).
  GermJet operator+(const GermJet& o) const {
    std::vector<ScalarJet<T>> comps;
    comps.reserve(comps_.size());
    for (size_t j = 0; j < comps_.size(); ++j) comps.push_back(comps_[j] + o.comps_[j]);
    return GermJet(space_, std::move(comps));
  }
  GermJet operator-(const GermJet& o) const {
    std::vector<ScalarJet<T>> comps;
    comps.reserve(comps_.size());
    for (size_t j = 0; j < comps_.size(); ++j) comps.push_back(comps_[j] - o.comps_[j]);
    return GermJet(space_, std::move(comps));
  }
  GermJet scaled(const T& s) const {
    std::vector<ScalarJet<T>> comps;
    comps.reserve(comps_.size());
    for (size_t j = 0; j < comps_.size(); ++j) comps.push_back(comps_[j].scaled(s));
    return GermJet(space_, std::move(comps));
  }

 private:
  std::shared_ptr<const JetSpace> space_;
  std::vector<ScalarJet<T>> comps_;
  Matrix<T> linear_;
};

// ---------------------------------------------------------------------------
// Composition, inversion, iteration, projection.
// ---------------------------------------------------------------------------

// Truncated powers of the components of g, built on demand.  Power of the
// monomial z^i is computed from the power at i minus one unit, so every
// intermediate result is shared across all composition coefficients.
template <class T>
class MonomialPowers {
 public:
  explicit MonomialPowers(const GermJet<T>& g) : g_(&g) {
    memo_.resize(static_cast<size_t>(g.space().icount()));
  }

  const ScalarJet<T>& power(int internal_idx) {
    auto& slot = memo_[internal_idx];
    if (slot) return *slot;
    const JetSpace& sp = g_->space();
    if (internal_idx == 0) {
      slot = ScalarJet<T>::constant(g_->space_ptr(), ring_one<T>());
      return *slot;
    }
    const MultiIndex& mi = sp.monomial(internal_idx);
    int var = 0;
    while (mi.e[var] == 0) ++var;
    MultiIndex prev = mi;
    prev.e[var] -= 1;
    const ScalarJet<T>& tail = power(sp.internal_rank(prev));
    slot = tail * g_->component(var);
    return *slot;
  }

 private:
  const GermJet<T>* g_;
  std::vector<std::optional<ScalarJet<T>>> memo_;
};

// phi(g(z)) truncated at the common order; powers shared through `powers`.
template <class T>
ScalarJet<T> substitute(const ScalarJet<T>& phi, MonomialPowers<T>& powers,
                        const std::shared_ptr<const JetSpace>& space) {
  ScalarJet<T> out(space);
  for (int k = 0; k < space->icount(); ++k) {
    const T& c = phi.coeff_internal(k);
    if (ring_is_zero(c)) continue;
    out += powers.power(k).scaled(c);
  }
  return out;
}

// (f o g)(z) = f(g(z)), both truncated at the same order.
template <class T>
GermJet<T> compose(const GermJet<T>& f, const GermJet<T>& g) {
  require(f.vars() == g.vars() && f.order() == g.order(), Errc::DimensionMismatch,
          "composition of jets from different spaces");
  MonomialPowers<T> powers(g);
  std::vector<ScalarJet<T>> comps;
  comps.reserve(static_cast<size_t>(f.vars()));
  for (int j = 0; j < f.vars(); ++j)
    comps.push_back(substitute(f.component(j), powers, f.space_ptr()));
  return GermJet<T>(f.space_ptr(), std::move(comps));
}

// Compositional inverse: the unique germ h with f o h = h o f = id at this
// order.  Newton-free fixed point h <- A^{-1} o (id - N o h) where f = A + N;
// each pass is exact one degree further, so order-1 passes suffice.
template <class T>
GermJet<T> germ_inverse(const GermJet<T>& f) {
  auto inv = f.linear_part().try_inverse();
  require(inv.has_value(), Errc::SingularLinearPart,
          "germ has a singular linear part, no compositional inverse");
  GermJet<T> ainv = GermJet<T>::from_linear(f.space_ptr(), *inv);
  GermJet<T> nonlin = f.nonlinear_part();
  GermJet<T> id = GermJet<T>::identity(f.space_ptr());
  GermJet<T> h = ainv;
  for (int pass = 1; pass < f.order(); ++pass) {
    h = compose(ainv, id - compose(nonlin, h));
  }
  return h;
}

// q-fold composition of f with itself; q = 0 gives the identity.
template <class T>
GermJet<T> germ_iterate(const GermJet<T>& f, unsigned long q) {
  GermJet<T> acc = GermJet<T>::identity(f.space_ptr());
  GermJet<T> base = f;
  while (q) {
    if (q & 1ul) acc = compose(acc, base);
    base = compose(base, base);
    q >>= 1;
  }
  return acc;
}

// Truncation to a lower order (the jet projection pi_{m'}).
template <class T>
GermJet<T> project(const GermJet<T>& f, int new_order) {
  require(new_order >= 1, Errc::DegreeOutOfRange, "germ order must be at least 1");
  require(new_order <= f.order(), Errc::OrderIncrease,
          "projection cannot raise the truncation order");
  auto target = jet_space(f.vars(), new_order);
  std::vector<ScalarJet<T>> comps;
  comps.reserve(static_cast<size_t>(f.vars()));
  for (int j = 0; j < f.vars(); ++j) comps.push_back(f.component(j).projected(target));
  return GermJet<T>(target, std::move(comps));
}

// Degree-d coefficients of all components, in slot order
// (monomial-major, coordinate-minor).
template <class T>
std::vector<T> homogeneous_slice(const GermJet<T>& f, int d) {
  const JetSpace& sp = f.space();
  require(d >= 1 && d <= sp.order(), Errc::DegreeOutOfRange, "slice degree out of range");
  const int n = sp.vars();
  const int base = sp.degree_offset(d);
  std::vector<T> out(static_cast<size_t>(sp.slot_count(d)));
  for (int local = 0; local < sp.homogeneous_count(d); ++local)
    for (int j = 0; j < n; ++j)
      out[static_cast<size_t>(local) * n + j] = f.component(j).coeff_internal(base + local);
  return out;
}

template <class T>
GermJet<T> with_homogeneous_slice(const GermJet<T>& f, int d, const std::vector<T>& slice) {
  const JetSpace& sp = f.space();
  require(d >= 1 && d <= sp.order(), Errc::DegreeOutOfRange, "slice degree out of range");
  const int n = sp.vars();
  require(static_cast<int>(slice.size()) == sp.slot_count(d), Errc::DimensionMismatch,
          "slice has the wrong number of slots");
  const int base = sp.degree_offset(d);
  std::vector<ScalarJet<T>> comps;
  comps.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    ScalarJet<T> c = f.component(j);
    for (int local = 0; local < sp.homogeneous_count(d); ++local)
      c.set_coeff_internal(base + local, slice[static_cast<size_t>(local) * n + j]);
    comps.push_back(std::move(c));
  }
  return GermJet<T>(f.space_ptr(), std::move(comps));
}

using ExactGerm = GermJet<ExactComplex>;
using FloatGerm = GermJet<BigComplex>;
using ParamGerm = GermJet<ExactParamPoly>;
using ExactScalarJet = ScalarJet<ExactComplex>;

// Map every coefficient through a conversion (e.g. exact -> bigfloat at a
// chosen precision, or exact -> constant parameter polynomial).
template <class S, class T, class Convert>
GermJet<S> convert_germ(const GermJet<T>& f, Convert&& conv) {
  auto target = jet_space(f.vars(), f.order());
  std::vector<ScalarJet<S>> comps;
  comps.reserve(static_cast<size_t>(f.vars()));
  for (int j = 0; j < f.vars(); ++j) {
    ScalarJet<S> c(target);
    for (int k = 0; k < f.space().icount(); ++k)
      c.set_coeff_internal(k, conv(f.component(j).coeff_internal(k)));
    comps.push_back(std::move(c));
  }
  return GermJet<S>(target, std::move(comps));
}

}  // namespace jetlin
