#pragma once

#include "splab/ratlinalg.hpp"
#include "splab/symplectic.hpp"

#include <string>
#include <vector>

namespace splab {

/// i^exponent, exponent taken mod 4.
class FourthRoot {
 public:
  constexpr FourthRoot() = default;

  static FourthRoot i_pow(long exponent);
  static FourthRoot i_pow(const Integer& exponent);
  static FourthRoot from_sign(int s) { return i_pow(s < 0 ? 2L : 0L); }

  int exponent() const { return exponent_; }
  bool is_one() const { return exponent_ == 0; }
  FourthRoot inverse() const { return i_pow(-static_cast<long>(exponent_)); }

  /// One of "1", "i", "-1", "-i".
  std::string str() const;

  friend FourthRoot operator*(FourthRoot a, FourthRoot b) {
    return i_pow(static_cast<long>(a.exponent_ + b.exponent_));
  }
  friend bool operator==(FourthRoot, FourthRoot) = default;

 private:
  int exponent_ = 0;
};

// --- Lion–Vergne side -------------------------------------------------------

/// epsilon(l1, l2) in {+1, -1}.
int epsilon(const OrientedLagrangian& l1, const OrientedLagrangian& l2);

/// Same as epsilon, with the caller choosing the ordered basis of
/// kappa = l1 ∩ l2 used for the quotient orientations. The result must not
/// depend on that choice. Throws std::invalid_argument if kappa_basis is not
/// a basis of l1 ∩ l2.
int epsilon_with_kappa(const OrientedLagrangian& l1, const OrientedLagrangian& l2,
                       const std::vector<Vec>& kappa_basis);

/// s(l1, l2) = i^{g - dim(l1 ∩ l2)} epsilon(l1, l2).
FourthRoot s_pair(const OrientedLagrangian& l1, const OrientedLagrangian& l2);

/// s(f) = s(lambda0, f lambda0).
FourthRoot s_of_map(const SymplecticMap& f);

/// s(f) computed with an arbitrary orientation on lambda0; `oriented_l0` must
/// span lambda0.
FourthRoot s_of_map(const SymplecticMap& f, const OrientedLagrangian& oriented_l0);

// --- Turaev / Gilmer–Masbaum side -------------------------------------------

/// a *_f b = omega((f-1)^{-1} a, b) on a basis of (f-1)V. Not symmetric in
/// general.
struct StarMatrix {
  std::vector<Vec> basis;
  QMatrix gram;
};

StarMatrix star_matrix(const SymplecticMap& f, const PreimagePolicy& policy = {});

/// *_f evaluated on caller-supplied vectors of (f-1)V. Throws
/// std::invalid_argument when a vector is outside (f-1)V.
QMatrix star_gram_on(const SymplecticMap& f, const std::vector<Vec>& vectors,
                     const PreimagePolicy& policy = {});

/// sgn det(*_f); +1 for f = Id. Throws std::logic_error on a singular form.
int det_sign_star(const SymplecticMap& f);

/// Restriction of *_f to l ∩ (f-1)V. Throws std::logic_error if the
/// restriction is not symmetric.
SymBilinearForm star_lambda(const SymplecticMap& f, const OrientedLagrangian& l,
                            const PreimagePolicy& policy = {});

long n_of_map(const SymplecticMap& f);
long j_of_map(const SymplecticMap& f);
long k_of_map(const SymplecticMap& f);

/// x *_{f1,f2} y = omega((f1-1)^{-1}x + (f2-1)^{-1}x + x, y) on
/// (f1-1)V ∩ (f2-1)V. Throws std::logic_error on asymmetry.
SymBilinearForm pair_form(const SymplecticMap& f1, const SymplecticMap& f2,
                          const PreimagePolicy& policy = {});

long phi(const SymplecticMap& f1, const SymplecticMap& f2);

}  // namespace splab
