#include "splab/extension.hpp"

#include "splab/maslov.hpp"

#include <stdexcept>

namespace splab {

ExtElement ext_identity(std::size_t g) { return {SymplecticMap::identity(g), 0}; }

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  if (a.f.genus() != b.f.genus()) throw std::invalid_argument("ext_mul: genus mismatch");
  return {a.f * b.f, a.m + b.m + nu_cocycle(a.f, b.f)};
}

ExtElement ext_inverse(const ExtElement& e) {
  const SymplecticMap inv = e.f.inverse();
  return {inv, -e.m - nu_cocycle(e.f, inv)};
}

FourthRoot chi_s(const ExtElement& e) { return FourthRoot::i_pow(e.m) * s_of_map(e.f); }

FourthRoot chi_r(const ExtElement& e) {
  return FourthRoot::i_pow(Integer(n_of_map(e.f)) - e.m);
}

bool in_kernel_r(const ExtElement& e) {
  if (!e.f.is_integral()) throw std::invalid_argument("in_kernel_r: f must be integral");
  return chi_r(e).is_one();
}

}  // namespace splab
