#pragma once

#include "splab/symplectic.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace splab::lab {

struct SampleParams {
  std::size_t g = 2;
  std::size_t word_length = 12;
  long entry_bound = 2;
  std::uint64_t seed = 0;
  bool integral = true;

  /// Throws std::invalid_argument for g = 0, word_length = 0 or
  /// entry_bound < 1.
  void validate() const;
};

/// Portable deterministic stream. Bounded draws reduce the raw 64-bit output
/// directly so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  long nonzero(long bound);
  bool coin() { return (next() & 1U) != 0; }

  /// Integer in [-bound, bound], or p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(long bound, bool integral);
  Rational nonzero_rational(long bound, bool integral);

 private:
  std::mt19937_64 engine_;
};

/// Product of `word_length` transvections drawn from the stream.
SymplecticMap random_sp(const SampleParams& params, Rng& rng);

/// Same, seeded from params.seed.
SymplecticMap random_sp(const SampleParams& params);

/// Random n x n integer matrix with entries in [-2, 2] and nonzero
/// determinant. With `positive` the determinant is made positive.
QMatrix random_invertible(std::size_t n, Rng& rng, bool positive);

/// Re-expresses an ordered basis through a change-of-basis matrix c:
/// result_j = sum_i c(i, j) basis_i.
std::vector<Vec> rebase(const std::vector<Vec>& basis, const QMatrix& c);

/// f(lambda0) for random f, with a random orientation.
OrientedLagrangian random_lagrangian(const SampleParams& params, Rng& rng);

}  // namespace splab::lab
