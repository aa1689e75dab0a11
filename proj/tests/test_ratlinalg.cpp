#include "oracles.hpp"

#include "splab/ratlinalg.hpp"

#include <doctest.h>

using namespace splab;

namespace {

Vec v2(long a, long b) { return Vec{Rational(a), Rational(b)}; }

}  // namespace

TEST_SUITE("ratlinalg") {

TEST_CASE("rational parsing is exact and canonical") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(parse_rational("0/7") == 0);
  CHECK(parse_rational("12345678901234567890123") * 2 ==
        parse_rational("24691357802469135780246"));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("- 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/-4"), std::invalid_argument);
}

TEST_CASE("arithmetic keeps canonical form") {
  Rational r = Rational(1, 6) + Rational(1, 3);
  CHECK(r.get_num() == 1);
  CHECK(r.get_den() == 2);
  r = Rational(-2, 3) * make_rational(3, -4);
  CHECK(r.get_den() > 0);
  CHECK(r == Rational(1, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(make_rational(-10, -5) == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(rank(QMatrix::identity(4)) == 4);
  CHECK(rank(QMatrix(3, 3)) == 0);
  CHECK(rank(QMatrix(0, 0)) == 0);
  CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(QMatrix::identity(3)).dim() == 0);
  CHECK(kernel_basis(QMatrix(2, 2)).dim() == 2);
  const Subspace k = kernel_basis(QMatrix{{0, 1}, {0, 0}});
  REQUIRE(k.dim() == 1);
  CHECK(k.same_span(Subspace(2, {v2(1, 0)})));
}

TEST_CASE("image_basis") {
  CHECK(image_basis(QMatrix::identity(2)).dim() == 2);
  CHECK(image_basis(QMatrix(2, 2)).dim() == 0);
  const Subspace im = image_basis(QMatrix{{0, 1}, {0, 0}});
  REQUIRE(im.dim() == 1);
  CHECK(im.same_span(Subspace(2, {v2(1, 0)})));
}

TEST_CASE("solve_particular") {
  const Vec b = v2(3, -7);
  CHECK(solve_particular(QMatrix::identity(2), b) == b);
  // canonical pivot solution (0, 1); free variable set to 5 gives (5, 1)
  CHECK(solve_particular(QMatrix{{0, 1}, {0, 0}}, v2(1, 0)) == v2(0, 1));
  const Rational five = 5;
  CHECK(solve_particular(QMatrix{{0, 1}, {0, 0}}, v2(1, 0), std::span(&five, 1)) == v2(5, 1));
  CHECK_FALSE(solve_particular(QMatrix(2, 2), v2(1, 0)).has_value());
  CHECK_FALSE(solve_particular(QMatrix{{0, 1}, {0, 0}}, v2(0, 1)).has_value());
}

TEST_CASE("det") {
  CHECK(det(QMatrix(0, 0)) == 1);
  CHECK(det(QMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(det(QMatrix{{0, 1}, {-1, 0}}) == 1);
  CHECK_THROWS_AS(det(QMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("intersect and sum") {
  const Vec p = v2(1, 0), q = v2(0, 1), pq = v2(1, 1);
  const Subspace s(2, {p, pq});
  CHECK(intersect(s, s).same_span(s));
  CHECK(intersect(Subspace(2, {p}), Subspace(2, {q})).dim() == 0);
  CHECK(intersect(Subspace(2, {p, q}), Subspace(2, {pq})).same_span(Subspace(2, {pq})));

  CHECK(sum_subspace(s, Subspace(2)).same_span(s));
  CHECK(sum_subspace(Subspace(2, {p}), Subspace(2, {q})).dim() == 2);
  CHECK(sum_subspace(Subspace(2, {p}), Subspace(2, {p})).same_span(Subspace(2, {p})));
}

TEST_CASE("subspace rejects dependent bases") {
  CHECK_THROWS_AS(Subspace(2, {v2(1, 2), v2(2, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(Subspace(3, {v2(1, 2)}), std::invalid_argument);
}

TEST_CASE("signature examples") {
  CHECK(inertia(QMatrix{{1, 0}, {0, -1}}) == Inertia{1, 1, 0});
  CHECK(inertia(QMatrix{{1, 0}, {0, -1}}).signature() == 0);
  const Inertia d = inertia(QMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, -5}});
  CHECK(d == Inertia{2, 1, 0});
  CHECK(d.signature() == 1);
  // zero diagonal with nonzero off-diagonal needs the pivot repair
  CHECK(inertia(QMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(inertia(QMatrix{{0, 1}, {1, 0}}) == oracle::inertia_descartes(QMatrix{{0, 1}, {1, 0}}));
  CHECK(inertia(QMatrix(0, 0)) == Inertia{0, 0, 0});
  CHECK(inertia(QMatrix(3, 3)) == Inertia{0, 0, 3});
  CHECK_THROWS_AS(inertia(QMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("form construction checks symmetry") {
  CHECK_THROWS_AS(SymBilinearForm({v2(1, 0), v2(0, 1)}, QMatrix{{0, 1}, {2, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymBilinearForm({v2(1, 0)}, QMatrix{{0, 1}, {1, 0}}), std::invalid_argument);
  const SymBilinearForm empty;
  CHECK(signature(empty) == Inertia{0, 0, 0});
}

TEST_CASE("property: rank-nullity and subspace dimension formula") {
  lab::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(0, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
    const QMatrix m = oracle::random_matrix(rows, cols, rng, 1, true);
    const Subspace k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == cols);
    for (const auto& v : k.basis()) CHECK(is_zero(m * v));
    CHECK(image_basis(m).dim() == rank(m));

    const std::size_t n = 5;
    const QMatrix a = oracle::random_matrix(n, static_cast<std::size_t>(rng.uniform(0, 4)), rng, 1, true);
    const QMatrix b = oracle::random_matrix(n, static_cast<std::size_t>(rng.uniform(0, 4)), rng, 1, true);
    const Subspace sa = image_basis(a), sb = image_basis(b);
    const Subspace cap = intersect(sa, sb);
    CHECK(sum_subspace(sa, sb).dim() + cap.dim() == sa.dim() + sb.dim());
    for (const auto& v : cap.basis()) {
      CHECK(sa.contains(v));
      CHECK(sb.contains(v));
    }
  }
}

TEST_CASE("property: solve_particular reproduces b") {
  lab::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const QMatrix m = oracle::random_matrix(4, 5, rng, 1, true);
    Vec x(5);
    for (auto& e : x) e = rng.rational(3, false);
    const Vec b = m * x;
    const auto free = PreimagePolicy{static_cast<std::uint64_t>(trial) + 1}.free_values(5, 0);
    const auto sol = solve_particular(m, b, free);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);
    const auto canonical = solve_particular(m, b);
    REQUIRE(canonical.has_value());
    CHECK(m * *canonical == b);
  }
}

TEST_CASE("property: det agrees with Leibniz and keeps sign under congruence") {
  lab::Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const QMatrix m = oracle::random_matrix(n, n, rng);
    CHECK(det(m) == oracle::det_leibniz(m));
    const QMatrix g = oracle::random_symmetric(n, rng);
    const QMatrix p = lab::random_invertible(n, rng, false);
    CHECK(sgn(det(p.transpose() * g * p)) == sgn(det(g)));
  }
}

TEST_CASE("property: inertia matches the characteristic-polynomial oracle and is congruence invariant") {
  lab::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    QMatrix g = oracle::random_symmetric(n, rng);
    if (trial % 4 == 0)
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 0;  // force the pivot repair path
    const Inertia ref = oracle::inertia_descartes(g);
    const Inertia got = inertia(g);
    CHECK(got == ref);
    CHECK(got.pos + got.neg + got.zero == n);
    const QMatrix p = lab::random_invertible(n, rng, false);
    CHECK(inertia(p.transpose() * g * p) == got);
  }
}

}  // TEST_SUITE
