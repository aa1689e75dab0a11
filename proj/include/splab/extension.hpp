#pragma once

#include "splab/invariants.hpp"
#include "splab/symplectic.hpp"

namespace splab {

/// Element (f, m) of the central extension of Sp(g) by Z defined by the
/// Maslov cocycle nu. Levels are unbounded and never reduced.
struct ExtElement {
  SymplecticMap f;
  Integer m;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

ExtElement ext_identity(std::size_t g);

/// (f1, m1)(f2, m2) = (f1 f2, m1 + m2 + nu(f1, f2)).
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);

/// (f^{-1}, -m - nu(f, f^{-1})).
ExtElement ext_inverse(const ExtElement& e);

/// i^m s(f).
FourthRoot chi_s(const ExtElement& e);

/// i^{n(f) - m}.
FourthRoot chi_r(const ExtElement& e);

/// n(f) ≡ m (mod 4). Throws std::invalid_argument for non-integral f.
bool in_kernel_r(const ExtElement& e);

}  // namespace splab
