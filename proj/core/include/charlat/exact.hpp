#pragma once

// Exact integer and rational arithmetic shared by every other module.
//
// Integers and rationals are GMP values. mpq_class keeps every arithmetic
// result in canonical form (reduced, positive denominator); values built
// from a raw numerator/denominator pair must go through make_rational().

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace charlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced num/den. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Decimal rendering used by every output format.
inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

/// Parses a decimal integer; throws std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);

/// Exact conversion; throws std::domain_error when x is not an integer.
Integer to_integer(const Rational& x);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer pow2(unsigned long e);
Integer factorial(unsigned long n);

struct GcdResult {
  Integer g;  // gcd(|a|, |b|) > 0
  Integer x;
  Integer y;  // a*x + b*y == g
};

/// Extended Euclid. Both inputs zero is a domain error.
GcdResult extended_gcd(const Integer& a, const Integer& b);

/// Bezout coefficients for a coprime pair (num, den):
/// c*num + d*den == 1 with 0 <= d < num.
struct BezoutPair {
  Integer c;
  Integer d;
  Integer for_numerator;
  Integer for_denominator;

  bool valid() const;

  /// The representative (c + t*den, d - t*num). Still valid, not normalized.
  BezoutPair shifted(long t) const;

  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

BezoutPair normalize_bezout(const Integer& num, const Integer& den);

/// Largest e with p^e | x. x must be nonzero and p >= 2.
long padic_valuation(const Integer& x, unsigned long p);
/// v_p(num) - v_p(den).
long padic_valuation(const Rational& x, unsigned long p);

inline long nu2(const Integer& x) { return padic_valuation(x, 2); }

/// x with every factor of 2 removed (x != 0).
Integer odd_part(const Integer& x);

bool is_power_of_two(const Integer& x);

bool is_prime(unsigned long n);

}  // namespace charlat
