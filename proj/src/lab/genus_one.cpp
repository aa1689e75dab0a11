#include "splab/lab/genus_one.hpp"

#include <stdexcept>

namespace splab::lab {

namespace {

struct Entries {
  Rational a, b, c, d;
};

Entries entries(const SymplecticMap& f) {
  if (f.genus() != 1) throw std::invalid_argument("genus-one formula needs g = 1");
  const QMatrix& m = f.matrix();
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

SymplecticMap make(Rational a, Rational b, Rational c, Rational d) {
  return SymplecticMap(1, QMatrix{{a, b}, {c, d}});
}

}  // namespace

std::string_view to_string(Sl2Case c) {
  switch (c) {
    case Sl2Case::UpperA: return "UPPER_A";
    case Sl2Case::UpperUnipotent: return "UPPER_UNIPOTENT";
    case Sl2Case::Identity: return "IDENTITY";
    case Sl2Case::CNonzeroBCritical: return "C_NONZERO_B_CRITICAL";
    case Sl2Case::CNonzeroGeneric: return "C_NONZERO_GENERIC";
  }
  return "?";
}

Sl2Case classify_sl2(const SymplecticMap& f) {
  const auto [a, b, c, d] = entries(f);
  if (c == 0) {
    if (a != 1) return Sl2Case::UpperA;  // a = 0 is impossible when det = 1
    return b == 0 ? Sl2Case::Identity : Sl2Case::UpperUnipotent;
  }
  return b == (a - 1) * (d - 1) / c ? Sl2Case::CNonzeroBCritical : Sl2Case::CNonzeroGeneric;
}

long predicted_n_sl2(const SymplecticMap& f) {
  const auto [a, b, c, d] = entries(f);
  switch (classify_sl2(f)) {
    case Sl2Case::UpperA: return a > 0 ? 0 : -2;
    case Sl2Case::UpperUnipotent:
    case Sl2Case::Identity: return 0;
    case Sl2Case::CNonzeroBCritical: return c > 0 ? -1 : 1;
    case Sl2Case::CNonzeroGeneric:
      if (c > 0) return -1;
      return (a - 1) * (d - 1) > b * c ? -3 : 1;
  }
  throw std::logic_error("unreachable");
}

FourthRoot predicted_s_sl2(const SymplecticMap& f) {
  const auto [a, b, c, d] = entries(f);
  if (c == 0) return FourthRoot::from_sign(sign(a));
  return FourthRoot::i_pow(1L) * FourthRoot::from_sign(sign(c));
}

SymplecticMap sample_sl2_case(Sl2Case which, Rng& rng, long bound) {
  switch (which) {
    case Sl2Case::UpperA: {
      Rational a;
      do a = rng.nonzero_rational(bound + 1, false);
      while (a == 1);
      return make(a, rng.rational(bound, false), 0, 1 / a);
    }
    case Sl2Case::UpperUnipotent:
      return make(1, rng.nonzero_rational(bound, false), 0, 1);
    case Sl2Case::Identity:
      return SymplecticMap::identity(1);
    case Sl2Case::CNonzeroBCritical: {
      // b = (a-1)(d-1)/c together with ad - bc = 1 forces a + d = 2.
      const Rational a = rng.rational(bound, false);
      const Rational c = rng.nonzero_rational(bound, false);
      const Rational d = 2 - a;
      return make(a, (a - 1) * (d - 1) / c, c, d);
    }
    case Sl2Case::CNonzeroGeneric: {
      Rational a, d;
      do {
        a = rng.rational(bound, false);
        d = rng.rational(bound, false);
      } while (a + d == 2);
      const Rational c = rng.nonzero_rational(bound, false);
      return make(a, (a * d - 1) / c, c, d);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace splab::lab
