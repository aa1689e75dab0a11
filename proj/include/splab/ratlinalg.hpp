#pragma once

#include "splab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace splab {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& t, const Vec& v);
bool is_zero(const Vec& v);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static QMatrix from_columns(std::size_t rows, std::span<const Vec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  QMatrix transpose() const;
  bool is_symmetric() const;
  bool is_integral() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
Vec operator*(const QMatrix& m, const Vec& v);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon echelon(const QMatrix& m);

/// A subspace of Q^n carried by a linearly independent basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Throws std::invalid_argument unless the vectors are independent and of
  /// length ambient_dim.
  Subspace(std::size_t ambient_dim, std::vector<Vec> basis);

  /// Span of an arbitrary family; keeps the vectors that increase the rank,
  /// in order.
  static Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool same_span(const Subspace& other) const;

  /// Coordinates of v in the stored basis; nullopt when v is not in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
};

/// Selects the particular solution reported by solve_particular. Seed 0 is the
/// canonical choice (free variables zero); other seeds assign small
/// pseudo-random integers to the free variables. Results downstream must not
/// depend on the seed.
struct PreimagePolicy {
  std::uint64_t seed = 0;

  /// Free-variable values for the `call`-th solve performed under this policy.
  std::vector<Rational> free_values(std::size_t count, std::size_t call) const;
};

std::size_t rank(const QMatrix& m);
Subspace kernel_basis(const QMatrix& m);
Subspace image_basis(const QMatrix& m);

/// One x with m·x = b, or nullopt when b is not in the image. Free variables
/// take `free_values` in column order (missing entries are zero).
std::optional<Vec> solve_particular(const QMatrix& m, const Vec& b,
                                    std::span<const Rational> free_values = {});

Rational det(const QMatrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_subspace(const Subspace& a, const Subspace& b);

/// Inertia of a symmetric form.
struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(pos) - static_cast<long>(neg); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// A symmetric bilinear form given by its Gram matrix on an explicit basis.
class SymBilinearForm {
 public:
  SymBilinearForm() = default;
  /// Throws std::invalid_argument when gram is not square of side
  /// basis.size() or not exactly symmetric.
  SymBilinearForm(std::vector<Vec> space_basis, QMatrix gram);

  const std::vector<Vec>& space_basis() const { return space_basis_; }
  const QMatrix& gram() const { return gram_; }
  std::size_t dim() const { return space_basis_.size(); }

 private:
  std::vector<Vec> space_basis_;
  QMatrix gram_;
};

/// Sylvester inertia of a symmetric Gram matrix by symmetric Gaussian
/// elimination. Throws std::invalid_argument on an asymmetric matrix.
Inertia inertia(const QMatrix& gram);
Inertia signature(const SymBilinearForm& form);

}  // namespace splab
