#include "jetlin/jets.hpp"

#include <map>
#include <mutex>

namespace jetlin {

namespace {

void generate_degree(int vars_left, int degree_left, std::vector<int>& current,
                     std::vector<MultiIndex>& out) {
  if (vars_left == 1) {
    current.push_back(degree_left);
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  // Descending first exponent gives descending lexicographic order within a
  // total degree.
  for (int e = degree_left; e >= 0; --e) {
    current.push_back(e);
    generate_degree(vars_left - 1, degree_left - e, current, out);
    current.pop_back();
  }
}

}  // namespace

JetSpace::JetSpace(int vars, int order) : n_(vars), m_(order) {
  require(n_ >= 1 && n_ <= 16, Errc::DimensionMismatch,
          "variable count must be between 1 and 16");
  require(m_ >= 1 && m_ <= 64, Errc::DegreeOutOfRange,
          "truncation order must be between 1 and 64");
  offsets_.push_back(0);
  std::vector<int> scratch;
  for (int d = 0; d <= m_; ++d) {
    generate_degree(n_, d, scratch, monomials_);
    offsets_.push_back(static_cast<int>(monomials_.size()));
    require(monomials_.size() <= 2'000'000, Errc::DegreeOutOfRange,
            "jet space too large for this variable count and order");
  }
  degrees_.resize(monomials_.size());
  index_.reserve(monomials_.size() * 2);
  for (int d = 0; d <= m_; ++d)
    for (int k = offsets_[d]; k < offsets_[d + 1]; ++k) {
      degrees_[k] = d;
      index_.emplace(monomials_[k], k);
    }
}

int JetSpace::internal_rank(const MultiIndex& i) const {
  require(i.vars() == n_, Errc::DimensionMismatch,
          "multi-index arity does not match the jet space");
  auto it = index_.find(i);
  require(it != index_.end(), Errc::DegreeOutOfRange,
          "monomial " + i.to_string() + " outside degrees 0.." + std::to_string(m_) +
              " (negative exponents are not monomials)");
  return it->second;
}

bool JetSpace::contains(const MultiIndex& i) const {
  return i.vars() == n_ && index_.count(i) > 0;
}

int JetSpace::rank(const MultiIndex& i) const {
  int internal = internal_rank(i);
  require(internal > 0, Errc::DegreeOutOfRange, "the constant monomial has no rank");
  return internal - 1;
}

std::pair<MultiIndex, int> JetSpace::slot_decode(int d, int slot) const {
  require(d >= 1 && d <= m_, Errc::DegreeOutOfRange, "slot degree out of range");
  require(slot >= 0 && slot < slot_count(d), Errc::DegreeOutOfRange, "slot out of range");
  int local = slot / n_;
  int coordinate = slot % n_;
  return {monomials_[offsets_[d] + local], coordinate};
}

std::shared_ptr<const JetSpace> jet_space(int vars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(vars, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto space = std::make_shared<const JetSpace>(vars, order);
  cache.emplace(key, space);
  return space;
}

}  // namespace jetlin
