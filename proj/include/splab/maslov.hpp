#pragma once

#include "splab/ratlinalg.hpp"
#include "splab/symplectic.hpp"

namespace splab {

// Maslov index of a lagrangian triple. Orientations of the inputs are ignored.

/// Gram matrix of B(a, b) = omega(x, b) on W = (l1 + l2) ∩ l3, where a = x' + x
/// with x' in l1 and x in l2. Throws std::logic_error if the result is not
/// symmetric or a decomposition fails; both indicate a bug.
SymBilinearForm maslov_form(const OrientedLagrangian& l1, const OrientedLagrangian& l2,
                            const OrientedLagrangian& l3, const PreimagePolicy& policy = {});

long maslov_index(const OrientedLagrangian& l1, const OrientedLagrangian& l2,
                  const OrientedLagrangian& l3);

/// nu(f1, f2) = mu(lambda0, f1 lambda0, f1 f2 lambda0).
long nu_cocycle(const SymplecticMap& f1, const SymplecticMap& f2);

}  // namespace splab
