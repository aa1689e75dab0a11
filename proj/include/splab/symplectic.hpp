#pragma once

#include "splab/ratlinalg.hpp"

#include <cstddef>
#include <vector>

namespace splab {

// Coordinates on Q^{2g} are ordered (p1..pg, q1..qg); the standard form has
// Gram matrix J = [[0, I], [-I, 0]], so omega(p_i, q_j) = delta_ij. Vectors
// are columns and maps act by left multiplication.

/// Gram matrix of omega for genus g.
QMatrix omega_gram(std::size_t g);

/// omega(u, v) = u^T J v. Throws std::invalid_argument on odd or mismatched
/// lengths.
Rational omega(const Vec& u, const Vec& v);

bool is_symplectic(const QMatrix& m, std::size_t g);

class SymplecticMap {
 public:
  /// Throws std::invalid_argument unless m is 2g x 2g with m^T J m = J.
  SymplecticMap(std::size_t g, QMatrix m);

  static SymplecticMap identity(std::size_t g);

  std::size_t genus() const { return g_; }
  std::size_t dim() const { return 2 * g_; }
  const QMatrix& matrix() const { return m_; }

  bool is_identity() const;
  bool is_integral() const { return m_.is_integral(); }

  /// f - Id as a plain matrix.
  QMatrix minus_identity() const;

  SymplecticMap inverse() const;
  Vec apply(const Vec& v) const { return m_ * v; }

  friend SymplecticMap operator*(const SymplecticMap& a, const SymplecticMap& b);
  friend bool operator==(const SymplecticMap&, const SymplecticMap&) = default;

 private:
  struct Unchecked {};
  SymplecticMap(Unchecked, std::size_t g, QMatrix m) : g_(g), m_(std::move(m)) {}

  std::size_t g_;
  QMatrix m_;
};

/// A lagrangian of Q^{2g} together with an ordered basis; the orientation is
/// the class of that basis under positive-determinant changes of basis.
class OrientedLagrangian {
 public:
  /// Throws std::invalid_argument unless the g vectors are independent and
  /// pairwise omega-orthogonal.
  OrientedLagrangian(std::size_t g, std::vector<Vec> basis);

  std::size_t genus() const { return g_; }
  const std::vector<Vec>& basis() const { return basis_; }
  Subspace subspace() const { return Subspace(2 * g_, basis_); }

  /// Same underlying lagrangian with the opposite orientation.
  OrientedLagrangian reversed() const;

  /// Same span; the change of basis has positive determinant.
  bool same_oriented(const OrientedLagrangian& other) const;
  bool same_span(const OrientedLagrangian& other) const;

 private:
  std::size_t g_;
  std::vector<Vec> basis_;
};

/// lambda_0 = span(p1..pg), oriented by (p1, ..., pg).
OrientedLagrangian standard_lagrangian(std::size_t g);

OrientedLagrangian pushforward(const SymplecticMap& f, const OrientedLagrangian& l);

/// omega-orthogonal complement of s inside Q^{2g}.
Subspace perp(const Subspace& s);

/// x -> x + t·omega(x, v)·v. Throws std::invalid_argument for v = 0.
SymplecticMap transvection(const Vec& v, const Rational& t);

/// Direct sum with the identity on a new pair (p_{g+1}, q_{g+1}).
SymplecticMap stabilize(const SymplecticMap& f);

/// Sign of det(C) where `to = from · C`, both ordered bases of one subspace.
/// Throws std::invalid_argument when the spans differ.
int change_of_basis_sign(const std::vector<Vec>& from, const std::vector<Vec>& to);

}  // namespace splab
