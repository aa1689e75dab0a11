#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace splab {

// Exact scalar of the whole library. gmpxx keeps mpq_class values canonical
// (denominator > 0, gcd 1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "p/q" (optional leading '-', decimal digits only). The
/// result is canonicalized. Throws std::invalid_argument on anything else,
/// including decimal points, exponents and a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. Prefer this over mpq_class(num, den), which
/// does not canonicalize. Throws std::invalid_argument when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Floor-mod of an arbitrary integer into [0, m).
long mod_floor(const Integer& value, long m);

}  // namespace splab
