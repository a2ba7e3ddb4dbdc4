#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace k3twist {

/// Arbitrary-precision integer. Every lattice and matrix entry uses this type.
using Integer = mpz_class;
/// Canonicalized arbitrary-precision rational.
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
/// Accepts "p", "p/q" and surrounding whitespace; the result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool divides(const Integer& d, const Integer& n) {
  return d != 0 ? mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0 : n == 0;
}

/// p-adic valuation of a nonzero integer.
unsigned long valuation(const Integer& n, const Integer& p);
/// Sorted distinct prime factors, by trial division (levels here are small).
std::vector<Integer> prime_factors(const Integer& n);

/// Decimal rendering with `digits` significant digits, for labels only.
std::string to_decimal(const Rational& q, int digits = 6);

}  // namespace k3twist
