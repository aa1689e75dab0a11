#include "splab/ratlinalg.hpp"

#include "splab/mix.hpp"

#include <stdexcept>
#include <utility>

namespace splab {

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rational& t, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, std::span<const Vec> columns) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec QMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec QMatrix::row(std::size_t r) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& x : entries_) {
    if (!is_integer(x)) return false;
  }
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Vec operator*(const QMatrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out = zero_vec(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon echelon(const QMatrix& m) {
  Echelon e{m, {}};
  QMatrix& a = e.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));

    const Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Rational factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= factor * a(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  return e;
}

std::size_t rank(const QMatrix& m) { return echelon(m).pivots.size(); }

Subspace kernel_basis(const QMatrix& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.cols(), free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace(m.cols(), std::move(basis));
}

Subspace image_basis(const QMatrix& m) {
  const Echelon e = echelon(m);
  std::vector<Vec> basis;
  basis.reserve(e.pivots.size());
  for (auto p : e.pivots) basis.push_back(m.column(p));
  return Subspace(m.rows(), std::move(basis));
}

std::optional<Vec> solve_particular(const QMatrix& m, const Vec& b,
                                    std::span<const Rational> free_values) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  Vec x = zero_vec(m.cols());
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    if (k < free_values.size()) x[j] = free_values[k];
    ++k;
  }
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    Rational value = e.reduced(i, m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_pivot[j] && x[j] != 0) value -= e.reduced(i, j) * x[j];
    x[e.pivots[i]] = value;
  }
  return x;
}

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      result = -result;
    }
    result *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vec> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_) {
    if (v.size() != ambient_dim_) throw std::invalid_argument("basis vector length mismatch");
  }
  if (rank(QMatrix::from_columns(ambient_dim_, basis_)) != basis_.size()) {
    throw std::invalid_argument("subspace basis is not linearly independent");
  }
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vec> vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("span: vector length mismatch");
    if (is_zero(v) || s.contains(v)) continue;
    s.basis_.push_back(v);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vec(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("coordinates: length mismatch");
  return solve_particular(QMatrix::from_columns(ambient_dim_, basis_), v);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::same_span(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_ || dim() != other.dim()) return false;
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  // Kernel of [A | -B]; each kernel vector (x, y) yields A x = B y in the
  // intersection, and x -> A x is injective.
  QMatrix stacked(n, a.dim() + b.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < a.dim(); ++j) stacked(r, j) = a.basis()[j][r];
    for (std::size_t j = 0; j < b.dim(); ++j) stacked(r, a.dim() + j) = -b.basis()[j][r];
  }
  std::vector<Vec> basis;
  const Subspace kernel = kernel_basis(stacked);
  for (const auto& k : kernel.basis()) {
    Vec v = zero_vec(n);
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (k[j] != 0) v = v + k[j] * a.basis()[j];
    basis.push_back(std::move(v));
  }
  return Subspace(n, std::move(basis));
}

Subspace sum_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

// ---------------------------------------------------------------------------
// Preimage policy

std::vector<Rational> PreimagePolicy::free_values(std::size_t count, std::size_t call) const {
  std::vector<Rational> values(count, Rational(0));
  if (seed == 0) return values;
  std::uint64_t state = mix_seed(seed, call);
  for (auto& v : values) {
    state = splitmix64(state);
    v = static_cast<long>(state % 7) - 3;
  }
  return values;
}

// ---------------------------------------------------------------------------
// Symmetric forms

SymBilinearForm::SymBilinearForm(std::vector<Vec> space_basis, QMatrix gram)
    : space_basis_(std::move(space_basis)), gram_(std::move(gram)) {
  if (gram_.rows() != space_basis_.size() || gram_.cols() != space_basis_.size())
    throw std::invalid_argument("gram side does not match basis length");
  if (!gram_.is_symmetric()) throw std::invalid_argument("gram matrix is not symmetric");
}

Inertia inertia(const QMatrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("inertia of an asymmetric matrix");
  QMatrix a = gram;
  const std::size_t n = a.rows();
  Inertia out;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  // row_i += row_j and col_i += col_j
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: a nonzero off-diagonal a(i,j) gives a new pivot
      // 2·a(i,j) after adding index j to index i.
      bool repaired = false;
      for (std::size_t i = k; i < n && !repaired; ++i)
        for (std::size_t j = i + 1; j < n && !repaired; ++j)
          if (a(i, j) != 0) {
            add_index(i, j);
            p = i;
            repaired = true;
          }
      if (!repaired) {
        out.zero += n - k;
        return out;
      }
    }
    swap_index(k, p);

    const Rational pivot = a(k, k);
    (pivot > 0 ? out.pos : out.neg) += 1;
    // Schur complement; row k is read-only here so the update stays symmetric.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational factor = a(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = a(k, r) = 0;
  }
  return out;
}

Inertia signature(const SymBilinearForm& form) { return inertia(form.gram()); }

}  // namespace splab
