#include "charlat/exact.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace charlat;

namespace {

Integer random_integer(std::mt19937_64& rng, unsigned bits) {
  Integer x = 0;
  for (unsigned i = 0; i < (bits + 63) / 64; ++i) {
    x <<= 64;
    x += Integer(std::to_string(rng()));
  }
  x >>= (64 - bits % 64) % 64;
  if (rng() & 1) x = -x;
  return x;
}

}  // namespace

TEST(ExtendedGcd, SmallCases) {
  auto r = extended_gcd(240, 0);
  EXPECT_EQ(r.g, 240);
  EXPECT_EQ(r.x, 1);
  EXPECT_EQ(r.y, 0);

  r = extended_gcd(6, 4);
  EXPECT_EQ(r.g, 2);
  EXPECT_EQ(r.x, 1);
  EXPECT_EQ(r.y, -1);

  r = extended_gcd(691, 65520);
  EXPECT_EQ(r.g, 1);
  EXPECT_EQ(691 * r.x + 65520 * r.y, 1);
}

TEST(ExtendedGcd, SignsAndZero) {
  auto r = extended_gcd(-12, 18);
  EXPECT_EQ(r.g, 6);
  EXPECT_EQ(-12 * r.x + 18 * r.y, 6);
  r = extended_gcd(0, -7);
  EXPECT_EQ(r.g, 7);
  EXPECT_EQ(-7 * r.y, 7);
  EXPECT_THROW(extended_gcd(0, 0), std::domain_error);
}

TEST(ExtendedGcd, RandomIdentity) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const unsigned bits_a = 1 + rng() % 512;
    const unsigned bits_b = 1 + rng() % 512;
    const Integer a = random_integer(rng, bits_a);
    const Integer b = random_integer(rng, bits_b);
    if (a == 0 && b == 0) continue;
    const GcdResult r = extended_gcd(a, b);
    ASSERT_GT(r.g, 0);
    ASSERT_EQ(a * r.x + b * r.y, r.g);
    Integer expected;
    mpz_gcd(expected.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    ASSERT_EQ(r.g, expected);
  }
}

TEST(Bezout, Normalization) {
  BezoutPair p = normalize_bezout(1, 240);
  EXPECT_EQ(p.c, 1);
  EXPECT_EQ(p.d, 0);
  p = normalize_bezout(1, 24);
  EXPECT_EQ(p.c, 1);
  EXPECT_EQ(p.d, 0);

  p = normalize_bezout(691, 65520);
  EXPECT_TRUE(p.valid());
  EXPECT_GE(p.d, 0);
  EXPECT_LT(p.d, 691);
  EXPECT_EQ(p.c * 691 + p.d * 65520, 1);
  EXPECT_EQ((p.d * 65520) % 691, 1);

  EXPECT_THROW(normalize_bezout(6, 4), std::domain_error);
  EXPECT_THROW(normalize_bezout(0, 4), std::domain_error);
}

TEST(Bezout, UniqueUpToShift) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Integer num = 1 + rng() % 100000;
    Integer den = 1 + rng() % 100000;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    num /= g;
    den /= g;
    const BezoutPair p = normalize_bezout(num, den);
    ASSERT_TRUE(p.valid());
    ASSERT_GE(p.d, 0);
    ASSERT_LT(p.d, num);
    for (long t = -3; t <= 3; ++t) {
      const BezoutPair q = p.shifted(t);
      ASSERT_TRUE(q.valid());
      // Re-normalizing any representative lands back on p.
      ASSERT_EQ(normalize_bezout(q.for_numerator, q.for_denominator), p);
      if (t != 0) ASSERT_NE(q, p);
    }
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_valuation(Integer(24), 2), 3);
  EXPECT_EQ(padic_valuation(Integer(16), 2), 4);
  EXPECT_EQ(padic_valuation(make_rational(1, 6), 2), -1);
  EXPECT_EQ(padic_valuation(make_rational(-9, 8), 3), 2);
  EXPECT_EQ(padic_valuation(Integer(-7), 7), 1);
  EXPECT_THROW(padic_valuation(Integer(0), 2), std::domain_error);
  EXPECT_THROW(padic_valuation(Rational(0), 2), std::domain_error);
}

TEST(Valuation, Additive) {
  std::mt19937_64 rng(99);
  const unsigned long primes[] = {2, 3, 5, 7, 691};
  for (int i = 0; i < 2000; ++i) {
    Integer x = random_integer(rng, 1 + rng() % 200);
    Integer y = random_integer(rng, 1 + rng() % 200);
    if (x == 0 || y == 0) continue;
    for (unsigned long p : primes) {
      ASSERT_EQ(padic_valuation(Integer(x * y), p), padic_valuation(x, p) + padic_valuation(y, p));
      const Rational q = make_rational(x, y);
      ASSERT_EQ(padic_valuation(q, p), padic_valuation(x, p) - padic_valuation(y, p));
    }
  }
}

TEST(Rationals, AlwaysReduced) {
  const Rational q = make_rational(-6, -4);
  EXPECT_EQ(q.get_num(), 3);
  EXPECT_EQ(q.get_den(), 2);
  const Rational r = make_rational(10, -4);
  EXPECT_EQ(r.get_num(), -5);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(to_integer(make_rational(12, 4)), 3);
  EXPECT_THROW(to_integer(make_rational(1, 2)), std::domain_error);
}

TEST(Helpers, Misc) {
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(7), 5040);
  EXPECT_EQ(odd_part(Integer(96)), 3);
  EXPECT_TRUE(is_power_of_two(Integer(1)));
  EXPECT_TRUE(is_power_of_two(Integer(4096)));
  EXPECT_FALSE(is_power_of_two(Integer(12)));
  EXPECT_FALSE(is_power_of_two(Integer(0)));
  EXPECT_TRUE(is_prime(691));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(parse_integer("-123456789012345678901234567890"), Integer("-123456789012345678901234567890"));
  EXPECT_THROW(parse_integer("12x"), std::invalid_argument);
}
