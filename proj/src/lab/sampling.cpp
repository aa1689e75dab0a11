#include "splab/lab/sampling.hpp"

#include <stdexcept>

namespace splab::lab {

void SampleParams::validate() const {
  if (g == 0) throw std::invalid_argument("genus must be at least 1");
  if (word_length == 0) throw std::invalid_argument("word length must be at least 1");
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be at least 1");
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

long Rng::nonzero(long bound) {
  const long magnitude = uniform(1, bound);
  return coin() ? magnitude : -magnitude;
}

Rational Rng::rational(long bound, bool integral) {
  const long num = uniform(-bound, bound);
  if (integral) return num;
  Rational r(num, uniform(1, bound));
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational(long bound, bool integral) {
  const long num = nonzero(bound);
  if (integral) return num;
  Rational r(num, uniform(1, bound));
  r.canonicalize();
  return r;
}

SymplecticMap random_sp(const SampleParams& params, Rng& rng) {
  params.validate();
  const std::size_t n = 2 * params.g;
  SymplecticMap f = SymplecticMap::identity(params.g);
  for (std::size_t step = 0; step < params.word_length; ++step) {
    Vec v(n);
    do {
      for (auto& x : v) x = rng.rational(params.entry_bound, params.integral);
    } while (is_zero(v));
    f = f * transvection(v, rng.nonzero_rational(params.entry_bound, params.integral));
  }
  if (!is_symplectic(f.matrix(), params.g)) throw std::logic_error("random_sp: not symplectic");
  return f;
}

SymplecticMap random_sp(const SampleParams& params) {
  Rng rng(params.seed);
  return random_sp(params, rng);
}

QMatrix random_invertible(std::size_t n, Rng& rng, bool positive) {
  for (;;) {
    QMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = rng.uniform(-2, 2);
    const Rational d = det(c);
    if (d == 0) continue;
    if (positive && d < 0)
      for (std::size_t i = 0; i < n; ++i) c(i, 0) = -c(i, 0);
    return c;
  }
}

std::vector<Vec> rebase(const std::vector<Vec>& basis, const QMatrix& c) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    Vec v = zero_vec(basis.front().size());
    for (std::size_t i = 0; i < c.rows(); ++i)
      if (c(i, j) != 0) v = v + c(i, j) * basis[i];
    out.push_back(std::move(v));
  }
  return out;
}

OrientedLagrangian random_lagrangian(const SampleParams& params, Rng& rng) {
  const auto image = pushforward(random_sp(params, rng), standard_lagrangian(params.g));
  const QMatrix c = random_invertible(params.g, rng, rng.coin());
  return OrientedLagrangian(params.g, rebase(image.basis(), c));
}

}  // namespace splab::lab
