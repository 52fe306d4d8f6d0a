#include "charlat/exact.hpp"

#include <stdexcept>

namespace charlat {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer parse_integer(const std::string& text) {
  Integer x;
  if (text.empty() || x.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return x;
}

Integer to_integer(const Rational& x) {
  if (x.get_den() != 1) {
    throw std::domain_error("to_integer: " + x.get_str() + " is not integral");
  }
  return x.get_num();
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

GcdResult extended_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw std::domain_error("extended_gcd: both arguments are zero");
  GcdResult r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool BezoutPair::valid() const {
  return for_numerator > 0 && for_denominator > 0 && c * for_numerator + d * for_denominator == 1;
}

BezoutPair BezoutPair::shifted(long t) const {
  return {c + t * for_denominator, d - t * for_numerator, for_numerator, for_denominator};
}

BezoutPair normalize_bezout(const Integer& num, const Integer& den) {
  if (num <= 0 || den <= 0) throw std::domain_error("normalize_bezout: arguments must be positive");
  const GcdResult e = extended_gcd(num, den);
  if (e.g != 1) {
    throw std::domain_error("normalize_bezout: " + num.get_str() + " and " + den.get_str() +
                            " are not coprime");
  }
  Integer d;
  mpz_fdiv_r(d.get_mpz_t(), e.y.get_mpz_t(), num.get_mpz_t());
  Integer c = 1 - d * den;
  mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), num.get_mpz_t());
  return {c, d, num, den};
}

long padic_valuation(const Integer& x, unsigned long p) {
  if (x == 0) throw std::domain_error("padic_valuation: zero has no valuation");
  if (p < 2) throw std::domain_error("padic_valuation: p must be prime");
  if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
  Integer rest;
  Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

long padic_valuation(const Rational& x, unsigned long p) {
  if (x == 0) throw std::domain_error("padic_valuation: zero has no valuation");
  return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

Integer odd_part(const Integer& x) {
  Integer r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(nu2(x)));
  return r;
}

bool is_power_of_two(const Integer& x) { return x > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

}  // namespace charlat
