#include "splab/maslov.hpp"

#include <stdexcept>

namespace splab {

SymBilinearForm maslov_form(const OrientedLagrangian& l1, const OrientedLagrangian& l2,
                            const OrientedLagrangian& l3, const PreimagePolicy& policy) {
  const std::size_t g = l1.genus();
  if (l2.genus() != g || l3.genus() != g)
    throw std::invalid_argument("maslov_form: genus mismatch");
  const std::size_t n = 2 * g;

  const Subspace w = intersect(sum_subspace(l1.subspace(), l2.subspace()), l3.subspace());

  // Unknowns: coordinates along l1's basis, then along l2's basis.
  std::vector<Vec> columns = l1.basis();
  columns.insert(columns.end(), l2.basis().begin(), l2.basis().end());
  const QMatrix stacked = QMatrix::from_columns(n, columns);

  std::vector<Vec> parts;  // the l2-component x of each basis vector of W
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const auto coeffs =
        solve_particular(stacked, w.basis()[i], policy.free_values(2 * g, i));
    if (!coeffs) throw std::logic_error("maslov_form: vector of W not in l1 + l2");
    Vec x = zero_vec(n);
    for (std::size_t j = 0; j < g; ++j)
      if ((*coeffs)[g + j] != 0) x = x + (*coeffs)[g + j] * l2.basis()[j];
    parts.push_back(std::move(x));
  }

  QMatrix gram(w.dim(), w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) gram(i, j) = omega(parts[i], w.basis()[j]);
  if (!gram.is_symmetric()) throw std::logic_error("maslov_form: B is not symmetric");
  return SymBilinearForm(w.basis(), std::move(gram));
}

long maslov_index(const OrientedLagrangian& l1, const OrientedLagrangian& l2,
                  const OrientedLagrangian& l3) {
  return signature(maslov_form(l1, l2, l3)).signature();
}

long nu_cocycle(const SymplecticMap& f1, const SymplecticMap& f2) {
  const auto l0 = standard_lagrangian(f1.genus());
  return maslov_index(l0, pushforward(f1, l0), pushforward(f1 * f2, l0));
}

}  // namespace splab
