#pragma once

// Reference values computed the slow, obvious way. Nothing here touches the
// library's Bernoulli engine: B_n comes straight from the defining recurrence
// sum_{k=0}^{n} C(n+1, k) B_k = 0, and everything else is derived from it.

#include <gmpxx.h>

#include <cstdlib>
#include <vector>

namespace oracle {

/// B_0 .. B_limit (signed, B_1 = -1/2).
inline std::vector<mpq_class> bernoulli_numbers(unsigned long limit) {
  std::vector<mpq_class> b(limit + 1);
  b[0] = 1;
  for (unsigned long n = 1; n <= limit; ++n) {
    mpz_class binom = 1;  // C(n+1, k)
    mpq_class sum = 0;
    for (unsigned long k = 0; k < n; ++k) {
      sum += binom * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[n] = -sum / mpq_class(n + 1);
    b[n].canonicalize();
  }
  return b;
}

/// |B_2n| for n = 0 .. limit.
inline std::vector<mpq_class> abs_even_bernoulli(unsigned long limit) {
  const auto b = bernoulli_numbers(2 * limit);
  std::vector<mpq_class> out(limit + 1);
  for (unsigned long n = 0; n <= limit; ++n) out[n] = abs(b[2 * n]);
  return out;
}

inline mpq_class over_4n(const mpq_class& abs_b2n, unsigned long n) {
  mpq_class q = abs_b2n / mpq_class(4 * n);
  q.canonicalize();
  return q;
}

inline mpz_class power_of_two(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline mpz_class sigma(unsigned long m, const mpq_class& abs_b2m) {
  const mpz_class a = m % 2 == 1 ? 2 : 1;
  return a * power_of_two(2 * m + 1) * (power_of_two(2 * m - 1) - 1) * over_4n(abs_b2m, m).get_num();
}

inline mpz_class tangent(unsigned long n, const mpq_class& abs_b2n) {
  mpq_class t = mpq_class(power_of_two(2 * n) * (power_of_two(2 * n) - 1)) * abs_b2n / mpq_class(2 * n);
  t.canonicalize();
  if (t.get_den() != 1) std::abort();
  return t.get_num();
}

/// Smallest d >= 0 with d * den = 1 mod num, by brute force.
inline mpz_class bezout_d(const mpz_class& num, const mpz_class& den) {
  for (mpz_class d = 0; d < num; ++d) {
    if ((d * den - 1) % num == 0) return d;
  }
  std::abort();
}

}  // namespace oracle
