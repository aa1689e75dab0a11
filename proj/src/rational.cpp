#include "splab/rational.hpp"

#include <stdexcept>

namespace splab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }

  Rational r;
  r.get_num().set_str(std::string(num), 10);
  r.get_den().set_str(std::string(den), 10);
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  if (text.front() == '-') r.get_num() = -r.get_num();
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

long mod_floor(const Integer& value, long m) {
  Integer rem;
  mpz_fdiv_r_ui(rem.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(m));
  return rem.get_si();
}

}  // namespace splab
