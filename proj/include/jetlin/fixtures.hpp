#pragma once

// Deterministic test-input generation: pinned reference objects (Jordan
// block, elliptic pair, obstruction germs, eigenvalue specs, certificates)
// plus seeded random germs.  The same seed always yields the same files.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jetlin/germ_io.hpp"
#include "jetlin/jets.hpp"
#include "jetlin/rings.hpp"

namespace jetlin {

// Small deterministic rational generator shared by fixtures and property
// tests: numerators in [-bound, bound], denominators in [1, bound].
class RationalSource {
 public:
  explicit RationalSource(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64();
  long next_in(long lo, long hi);  // inclusive
  Rational next_rational(long bound);
  ExactComplex next_complex(long bound);

 private:
  uint64_t state_;
};

// Random germ with identity linear part and random coefficients in degrees
// 2..m (tangent to the identity).
ExactGerm random_tangent_identity_germ(RationalSource& rng, int vars, int order, long bound = 3);

// Random germ with a prescribed linear part and random higher terms.
ExactGerm random_germ_with_linear(RationalSource& rng, const Matrix<ExactComplex>& linear,
                                  int order, long bound = 3);

struct Fixture {
  std::string name;  // file name, e.g. "jordan2_matrix.json"
  Json content;
};

// The full fixture set for a seed.  Pinned fixtures are identical for every
// seed; the random tail depends on it.
std::vector<Fixture> make_fixtures(uint64_t seed);

}  // namespace jetlin
