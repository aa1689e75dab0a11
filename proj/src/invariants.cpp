#include "splab/invariants.hpp"

#include <stdexcept>

namespace splab {

FourthRoot FourthRoot::i_pow(long exponent) {
  FourthRoot r;
  r.exponent_ = static_cast<int>(((exponent % 4) + 4) % 4);
  return r;
}

FourthRoot FourthRoot::i_pow(const Integer& exponent) {
  return i_pow(mod_floor(exponent, 4));
}

std::string FourthRoot::str() const {
  static const char* const names[] = {"1", "i", "-1", "-i"};
  return names[exponent_];
}

// ---------------------------------------------------------------------------
// epsilon and s

namespace {

struct Extension {
  std::vector<Vec> lifts;  // vectors of l appended after kappa's basis
  int sign = 1;            // orientation of (kappa, lifts) relative to l
};

// Extends kappa's basis greedily by l's own basis vectors.
Extension extend_kappa(const std::vector<Vec>& kappa_basis, const OrientedLagrangian& l) {
  const std::size_t n = 2 * l.genus();
  std::vector<Vec> extended = kappa_basis;
  Extension ext;
  for (const auto& b : l.basis()) {
    if (Subspace::span(n, extended).contains(b)) continue;
    extended.push_back(b);
    ext.lifts.push_back(b);
  }
  ext.sign = change_of_basis_sign(extended, l.basis());
  return ext;
}

}  // namespace

int epsilon_with_kappa(const OrientedLagrangian& l1, const OrientedLagrangian& l2,
                       const std::vector<Vec>& kappa_basis) {
  if (l1.genus() != l2.genus()) throw std::invalid_argument("epsilon: genus mismatch");
  const std::size_t n = 2 * l1.genus();
  const Subspace kappa = intersect(l1.subspace(), l2.subspace());
  if (!Subspace(n, kappa_basis).same_span(kappa))
    throw std::invalid_argument("epsilon: kappa_basis does not span l1 ∩ l2");

  const Extension e1 = extend_kappa(kappa_basis, l1);
  const Extension e2 = extend_kappa(kappa_basis, l2);

  // omega is well defined on kappa^perp / kappa, so the lifts can be paired
  // directly. The quotient lagrangians are transverse; a 0x0 Gram matrix
  // (equal spans) has determinant 1.
  const std::size_t r = e1.lifts.size();
  QMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = omega(e1.lifts[i], e2.lifts[j]);
  const Rational d = det(gram);
  if (d == 0) throw std::logic_error("epsilon: quotient lagrangians are not transverse");
  return e1.sign * e2.sign * sign(d);
}

int epsilon(const OrientedLagrangian& l1, const OrientedLagrangian& l2) {
  if (l1.genus() != l2.genus()) throw std::invalid_argument("epsilon: genus mismatch");
  return epsilon_with_kappa(l1, l2, intersect(l1.subspace(), l2.subspace()).basis());
}

FourthRoot s_pair(const OrientedLagrangian& l1, const OrientedLagrangian& l2) {
  const std::size_t k = intersect(l1.subspace(), l2.subspace()).dim();
  return FourthRoot::i_pow(static_cast<long>(l1.genus() - k)) *
         FourthRoot::from_sign(epsilon(l1, l2));
}

FourthRoot s_of_map(const SymplecticMap& f) {
  return s_of_map(f, standard_lagrangian(f.genus()));
}

FourthRoot s_of_map(const SymplecticMap& f, const OrientedLagrangian& oriented_l0) {
  if (!oriented_l0.same_span(standard_lagrangian(f.genus())))
    throw std::invalid_argument("s_of_map: base lagrangian must span lambda0");
  return s_pair(oriented_l0, pushforward(f, oriented_l0));
}

// ---------------------------------------------------------------------------
// Turaev forms

namespace {

Vec preimage(const QMatrix& f_minus_1, const Vec& a, const PreimagePolicy& policy,
             std::size_t call) {
  auto x = solve_particular(f_minus_1, a, policy.free_values(f_minus_1.cols(), call));
  if (!x) throw std::invalid_argument("vector is not in the image of f - 1");
  return *x;
}

Subspace image_of_f_minus_1(const SymplecticMap& f) { return image_basis(f.minus_identity()); }

}  // namespace

QMatrix star_gram_on(const SymplecticMap& f, const std::vector<Vec>& vectors,
                     const PreimagePolicy& policy) {
  const QMatrix fm1 = f.minus_identity();
  std::vector<Vec> pre;
  pre.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    pre.push_back(preimage(fm1, vectors[i], policy, i));

  QMatrix gram(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) gram(i, j) = omega(pre[i], vectors[j]);
  return gram;
}

StarMatrix star_matrix(const SymplecticMap& f, const PreimagePolicy& policy) {
  StarMatrix out;
  out.basis = image_of_f_minus_1(f).basis();
  out.gram = star_gram_on(f, out.basis, policy);
  return out;
}

int det_sign_star(const SymplecticMap& f) {
  const StarMatrix star = star_matrix(f);
  const Rational d = det(star.gram);
  if (d == 0) throw std::logic_error("det_sign_star: *_f is singular");
  return sign(d);
}

SymBilinearForm star_lambda(const SymplecticMap& f, const OrientedLagrangian& l,
                            const PreimagePolicy& policy) {
  if (f.genus() != l.genus()) throw std::invalid_argument("star_lambda: genus mismatch");
  const Subspace domain = intersect(l.subspace(), image_of_f_minus_1(f));
  QMatrix gram = star_gram_on(f, domain.basis(), policy);
  if (!gram.is_symmetric()) throw std::logic_error("star_lambda: restriction is not symmetric");
  return SymBilinearForm(domain.basis(), std::move(gram));
}

long j_of_map(const SymplecticMap& f) {
  return -signature(star_lambda(f, standard_lagrangian(f.genus()))).signature();
}

long k_of_map(const SymplecticMap& f) {
  return static_cast<long>(image_of_f_minus_1(f).dim()) + det_sign_star(f) - 1;
}

long n_of_map(const SymplecticMap& f) { return -j_of_map(f) - k_of_map(f); }

SymBilinearForm pair_form(const SymplecticMap& f1, const SymplecticMap& f2,
                          const PreimagePolicy& policy) {
  if (f1.genus() != f2.genus()) throw std::invalid_argument("pair_form: genus mismatch");
  const Subspace domain = intersect(image_of_f_minus_1(f1), image_of_f_minus_1(f2));
  const QMatrix fm1 = f1.minus_identity();
  const QMatrix fm2 = f2.minus_identity();

  std::vector<Vec> combined;
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    const Vec& x = domain.basis()[i];
    combined.push_back(preimage(fm1, x, policy, 2 * i) + preimage(fm2, x, policy, 2 * i + 1) + x);
  }
  QMatrix gram(domain.dim(), domain.dim());
  for (std::size_t i = 0; i < domain.dim(); ++i)
    for (std::size_t j = 0; j < domain.dim(); ++j)
      gram(i, j) = omega(combined[i], domain.basis()[j]);
  if (!gram.is_symmetric()) throw std::logic_error("pair_form: form is not symmetric");
  return SymBilinearForm(domain.basis(), std::move(gram));
}

long phi(const SymplecticMap& f1, const SymplecticMap& f2) {
  return signature(pair_form(f1, f2)).signature();
}

}  // namespace splab
