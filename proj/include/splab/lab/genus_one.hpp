#pragma once

#include "splab/invariants.hpp"
#include "splab/lab/sampling.hpp"

#include <array>
#include <string_view>

namespace splab::lab {

// Closed-form values of s and n on SL(2) = Sp(1), written f = [[a, b], [c, d]].

enum class Sl2Case {
  UpperA,              // c = 0, a not in {0, 1}
  UpperUnipotent,      // c = 0, a = 1, b != 0
  Identity,
  CNonzeroBCritical,   // c != 0, b = (a-1)(d-1)/c
  CNonzeroGeneric,     // c != 0, b != (a-1)(d-1)/c
};

inline constexpr std::array<Sl2Case, 5> kAllSl2Cases = {
    Sl2Case::UpperA, Sl2Case::UpperUnipotent, Sl2Case::Identity,
    Sl2Case::CNonzeroBCritical, Sl2Case::CNonzeroGeneric};

std::string_view to_string(Sl2Case c);

/// Throws std::invalid_argument for genus != 1.
Sl2Case classify_sl2(const SymplecticMap& f);

long predicted_n_sl2(const SymplecticMap& f);

/// sgn(a) when c = 0, sgn(c)·i otherwise.
FourthRoot predicted_s_sl2(const SymplecticMap& f);

/// A random element of SL(2, Q) in the requested case, entries built from
/// rationals bounded by `bound`.
SymplecticMap sample_sl2_case(Sl2Case which, Rng& rng, long bound);

}  // namespace splab::lab
