#include "splab/symplectic.hpp"

#include <stdexcept>
#include <utility>

namespace splab {

QMatrix omega_gram(std::size_t g) {
  QMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

Rational omega(const Vec& u, const Vec& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw std::invalid_argument("omega: vectors must share an even length");
  const std::size_t g = u.size() / 2;
  Rational out = 0;
  for (std::size_t i = 0; i < g; ++i) out += u[i] * v[g + i] - u[g + i] * v[i];
  return out;
}

bool is_symplectic(const QMatrix& m, std::size_t g) {
  if (m.rows() != 2 * g || m.cols() != 2 * g) return false;
  const QMatrix j = omega_gram(g);
  return m.transpose() * j * m == j;
}

// ---------------------------------------------------------------------------

SymplecticMap::SymplecticMap(std::size_t g, QMatrix m) : g_(g), m_(std::move(m)) {
  if (!is_symplectic(m_, g_)) throw std::invalid_argument("matrix is not symplectic");
}

SymplecticMap SymplecticMap::identity(std::size_t g) {
  return SymplecticMap(Unchecked{}, g, QMatrix::identity(2 * g));
}

bool SymplecticMap::is_identity() const { return m_ == QMatrix::identity(dim()); }

QMatrix SymplecticMap::minus_identity() const { return m_ - QMatrix::identity(dim()); }

SymplecticMap SymplecticMap::inverse() const {
  // f^{-1} = J^{-1} f^T J with J^{-1} = J^T.
  const QMatrix j = omega_gram(g_);
  return SymplecticMap(Unchecked{}, g_, j.transpose() * m_.transpose() * j);
}

SymplecticMap operator*(const SymplecticMap& a, const SymplecticMap& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("genus mismatch in product");
  return SymplecticMap(SymplecticMap::Unchecked{}, a.g_, a.m_ * b.m_);
}

// ---------------------------------------------------------------------------

OrientedLagrangian::OrientedLagrangian(std::size_t g, std::vector<Vec> basis)
    : g_(g), basis_(std::move(basis)) {
  if (basis_.size() != g_) throw std::invalid_argument("lagrangian needs exactly g vectors");
  (void)Subspace(2 * g_, basis_);  // length and independence
  for (std::size_t i = 0; i < g_; ++i)
    for (std::size_t j = i + 1; j < g_; ++j)
      if (omega(basis_[i], basis_[j]) != 0)
        throw std::invalid_argument("lagrangian basis is not isotropic");
}

OrientedLagrangian OrientedLagrangian::reversed() const {
  std::vector<Vec> b = basis_;
  b.front() = Rational(-1) * b.front();
  return OrientedLagrangian(g_, std::move(b));
}

bool OrientedLagrangian::same_span(const OrientedLagrangian& other) const {
  return g_ == other.g_ && subspace().same_span(other.subspace());
}

bool OrientedLagrangian::same_oriented(const OrientedLagrangian& other) const {
  return same_span(other) && change_of_basis_sign(basis_, other.basis_) > 0;
}

OrientedLagrangian standard_lagrangian(std::size_t g) {
  if (g == 0) throw std::invalid_argument("genus must be at least 1");
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < g; ++i) basis.push_back(unit_vec(2 * g, i));
  return OrientedLagrangian(g, std::move(basis));
}

OrientedLagrangian pushforward(const SymplecticMap& f, const OrientedLagrangian& l) {
  if (f.genus() != l.genus()) throw std::invalid_argument("genus mismatch in pushforward");
  std::vector<Vec> basis;
  for (const auto& b : l.basis()) basis.push_back(f.apply(b));
  return OrientedLagrangian(l.genus(), std::move(basis));
}

Subspace perp(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  if (n % 2 != 0) throw std::invalid_argument("perp: ambient dimension must be even");
  // omega(v, s) = v^T (J s); one constraint row per basis vector.
  const QMatrix j = omega_gram(n / 2);
  QMatrix constraints(s.dim(), n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec js = j * s.basis()[r];
    for (std::size_t c = 0; c < n; ++c) constraints(r, c) = js[c];
  }
  return kernel_basis(constraints);
}

SymplecticMap transvection(const Vec& v, const Rational& t) {
  if (v.size() % 2 != 0 || v.empty()) throw std::invalid_argument("transvection: bad length");
  if (is_zero(v)) throw std::invalid_argument("transvection: zero vector");
  const std::size_t n = v.size();
  QMatrix m = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    const Rational coeff = t * omega(unit_vec(n, c), v);
    if (coeff == 0) continue;
    for (std::size_t r = 0; r < n; ++r) m(r, c) += coeff * v[r];
  }
  return SymplecticMap(n / 2, std::move(m));
}

SymplecticMap stabilize(const SymplecticMap& f) {
  const std::size_t g = f.genus();
  // old p_i -> i, old q_i -> (g+1)+i; new pair sits at g and 2g+1.
  auto place = [g](std::size_t i) { return i < g ? i : i + 1; };
  QMatrix m = QMatrix::identity(2 * g + 2);
  for (std::size_t r = 0; r < 2 * g; ++r)
    for (std::size_t c = 0; c < 2 * g; ++c) m(place(r), place(c)) = f.matrix()(r, c);
  return SymplecticMap(g + 1, std::move(m));
}

int change_of_basis_sign(const std::vector<Vec>& from, const std::vector<Vec>& to) {
  if (from.size() != to.size()) throw std::invalid_argument("basis size mismatch");
  if (from.empty()) return 1;
  const Subspace s(from.front().size(), from);
  QMatrix c(from.size(), to.size());
  for (std::size_t j = 0; j < to.size(); ++j) {
    const auto coords = s.coordinates(to[j]);
    if (!coords) throw std::invalid_argument("bases span different subspaces");
    for (std::size_t i = 0; i < from.size(); ++i) c(i, j) = (*coords)[i];
  }
  const Rational d = det(c);
  if (d == 0) throw std::invalid_argument("target family is not a basis");
  return sign(d);
}

}  // namespace splab
