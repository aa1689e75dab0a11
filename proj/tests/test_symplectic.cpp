#include "oracles.hpp"

#include "splab/lab/sampling.hpp"
#include "splab/symplectic.hpp"

#include <doctest.h>

using namespace splab;

namespace {

// g = 1 basis vectors
const Vec P{1, 0};
const Vec Q{0, 1};

Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i); }

}  // namespace

TEST_SUITE("symplectic") {

TEST_CASE("omega") {
  CHECK(omega(e(4, 0), e(4, 2)) == 1);   // omega(p1, q1)
  CHECK(omega(e(4, 2), e(4, 0)) == -1);  // omega(q1, p1)
  CHECK(omega(e(4, 0), e(4, 3)) == 0);   // omega(p1, q2)
  CHECK(omega(e(4, 0), e(4, 1)) == 0);
  const Vec v{Rational(3, 2), -2, 5, Rational(1, 7)};
  CHECK(omega(v, v) == 0);
  CHECK(omega(P + Q, Q) == 1);
  CHECK_THROWS_AS(omega(Vec{1, 0}, Vec{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(QMatrix::identity(6), 3));
  CHECK(is_symplectic(QMatrix{{2, 0}, {0, Rational(1, 2)}}, 1));
  CHECK_FALSE(is_symplectic(QMatrix{{2, 0}, {0, 2}}, 1));
  CHECK_FALSE(is_symplectic(QMatrix::identity(3), 1));
  CHECK_THROWS_AS(SymplecticMap(1, QMatrix{{2, 0}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("standard_lagrangian") {
  const auto l1 = standard_lagrangian(1);
  CHECK(l1.basis() == std::vector<Vec>{P});
  const auto l2 = standard_lagrangian(2);
  CHECK(l2.basis() == std::vector<Vec>{e(4, 0), e(4, 1)});
  CHECK(perp(l2.subspace()).same_span(l2.subspace()));
  CHECK_THROWS_AS(standard_lagrangian(0), std::invalid_argument);
}

TEST_CASE("oriented lagrangian validation") {
  CHECK_THROWS_AS(OrientedLagrangian(2, {e(4, 0), e(4, 2)}), std::invalid_argument);  // p1, q1
  CHECK_THROWS_AS(OrientedLagrangian(2, {e(4, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(OrientedLagrangian(2, {e(4, 0), Rational(2) * e(4, 0)}), std::invalid_argument);
  const OrientedLagrangian a(2, {e(4, 0), e(4, 1)});
  const OrientedLagrangian b(2, {e(4, 1), e(4, 0)});
  CHECK(a.same_span(b));
  CHECK_FALSE(a.same_oriented(b));
  CHECK(a.same_oriented(b.reversed()));
}

TEST_CASE("pushforward") {
  const auto l0 = standard_lagrangian(1);
  CHECK(pushforward(SymplecticMap::identity(1), l0).same_oriented(l0));
  const SymplecticMap j(1, QMatrix{{0, 1}, {-1, 0}});
  const auto image = pushforward(j, l0);
  CHECK(image.basis() == std::vector<Vec>{Vec{0, -1}});  // (-q)
  CHECK(image.same_oriented(OrientedLagrangian(1, {Vec{0, -1}})));
  CHECK_FALSE(image.same_oriented(OrientedLagrangian(1, {Q})));
}

TEST_CASE("perp") {
  CHECK(perp(Subspace(4)).dim() == 4);
  const Subspace s = perp(Subspace(4, {e(4, 0)}));
  CHECK(s.same_span(Subspace(4, {e(4, 0), e(4, 1), e(4, 3)})));  // p1, p2, q2
}

TEST_CASE("transvection") {
  CHECK(transvection(Q, 0) == SymplecticMap::identity(1));
  // p -> p + omega(p, q) q = p + q, q -> q
  CHECK(transvection(Q, 1).matrix() == QMatrix{{1, 0}, {1, 1}});
  CHECK(transvection(P, 1).matrix() == QMatrix{{1, -1}, {0, 1}});
  CHECK_THROWS_AS(transvection(Vec{0, 0}, 1), std::invalid_argument);
}

TEST_CASE("stabilize") {
  CHECK(stabilize(SymplecticMap::identity(2)) == SymplecticMap::identity(3));
  const SymplecticMap f(1, QMatrix{{2, 3}, {1, 2}});
  const SymplecticMap big = stabilize(f);
  CHECK(big.genus() == 2);
  CHECK(big.matrix() == QMatrix{{2, 0, 3, 0}, {0, 1, 0, 0}, {1, 0, 2, 0}, {0, 0, 0, 1}});
}

TEST_CASE("inverse and products") {
  lab::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    lab::SampleParams sp{static_cast<std::size_t>(rng.uniform(1, 3)), 6, 2, 0, trial % 2 == 0};
    const SymplecticMap f = lab::random_sp(sp, rng);
    CHECK(f * f.inverse() == SymplecticMap::identity(sp.g));
    CHECK(is_symplectic((f * f).matrix(), sp.g));
  }
}

TEST_CASE("property: group laws on lagrangians and subspaces") {
  lab::Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t g = static_cast<std::size_t>(rng.uniform(1, 3));
    const lab::SampleParams sp{g, 5, 2, 0, trial % 2 == 0};
    const SymplecticMap f1 = lab::random_sp(sp, rng);
    const SymplecticMap f2 = lab::random_sp(sp, rng);
    const auto l = lab::random_lagrangian(sp, rng);
    CHECK(pushforward(f1 * f2, l).same_oriented(pushforward(f1, pushforward(f2, l))));

    const QMatrix basis = oracle::random_matrix(2 * g, static_cast<std::size_t>(rng.uniform(0, 2 * g)), rng, 1, true);
    const Subspace s = image_basis(basis);
    CHECK(perp(s).dim() == 2 * g - s.dim());
    CHECK(perp(perp(s)).same_span(s));

    Vec v(2 * g);
    do {
      for (auto& x : v) x = rng.rational(2, false);
    } while (is_zero(v));
    const Rational t = rng.rational(3, false), u = rng.rational(3, false);
    CHECK(transvection(v, t) * transvection(v, u) == transvection(v, t + u));
    CHECK(is_symplectic(transvection(v, t).matrix(), g));
  }
}

}  // TEST_SUITE
