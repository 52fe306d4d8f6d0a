// |B_2n| from the zeta function:
//
//   |B_2n| = 2 (2n)! zeta(2n) / (2 pi)^2n,
//
// with zeta(2n) evaluated as a truncated Euler product. Since the denominator
// D of B_2n is known exactly (von Staudt-Clausen), it suffices to know
// |B_2n| * D to within 1/2. Each Euler factor p^-2n is only computed to the
// number of bits that can still affect the product.

#include "charlat/bernoulli.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace charlat {

namespace {

constexpr unsigned long kMaxEulerPrime = 1UL << 20;

class Float {
 public:
  explicit Float(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Float() { mpfr_clear(v_); }
  Float(const Float&) = delete;
  Float& operator=(const Float&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long k = i * i; k <= limit; k += i) composite[k] = true;
  }
  return out;
}

unsigned long bit_length(unsigned long x) {
  unsigned long b = 0;
  while (x) {
    ++b;
    x >>= 1;
  }
  return b;
}

}  // namespace

Rational bernoulli_abs_zeta(unsigned long n) {
  if (n == 0) throw std::domain_error("bernoulli index must be positive");
  const unsigned long s = 2 * n;

  const Integer denominator = bernoulli_denominator(n);
  const Integer scale = 2 * factorial(s) * denominator;  // |B_2n| D = scale * zeta(s) / (2 pi)^s

  const double log2_target =
      static_cast<double>(mpz_sizeinbase(scale.get_mpz_t(), 2)) - static_cast<double>(s) * std::log2(2 * M_PI);
  const double guard = 64.0 + 2.0 * static_cast<double>(bit_length(s));
  const auto prec = static_cast<mpfr_prec_t>(std::max(64.0, log2_target + guard));

  // Tail of the Euler product beyond P is below 2^-(prec+8) once
  // (s-1) log2 P >= prec + 9.
  const double log2_p_max = (static_cast<double>(prec) + 9.0) / static_cast<double>(s - 1);
  if (log2_p_max > std::log2(static_cast<double>(kMaxEulerPrime))) return bernoulli_abs(n);
  const auto p_max = static_cast<unsigned long>(std::ceil(std::exp2(log2_p_max))) + 1;

  Float product(prec);
  mpfr_set_ui(product.get(), 1, MPFR_RNDN);
  for (unsigned long p : primes_up_to(p_max)) {
    const double magnitude_bits = static_cast<double>(s) * std::log2(static_cast<double>(p));
    const double significant = static_cast<double>(prec) - magnitude_bits;
    if (significant < -8.0) break;
    const auto work = static_cast<mpfr_prec_t>(std::max(32.0, significant + 32.0));
    Float term(work);
    mpfr_ui_pow_ui(term.get(), p, s, MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    Float head(work);
    mpfr_set(head.get(), product.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), head.get(), MPFR_RNDN);
    mpfr_sub(product.get(), product.get(), term.get(), MPFR_RNDN);
  }

  Float value(prec);
  mpfr_set_z(value.get(), scale.get_mpz_t(), MPFR_RNDN);
  mpfr_div(value.get(), value.get(), product.get(), MPFR_RNDN);  // scale * zeta(s)

  Float two_pi(prec);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
  mpfr_pow_ui(two_pi.get(), two_pi.get(), s, MPFR_RNDN);
  mpfr_div(value.get(), value.get(), two_pi.get(), MPFR_RNDN);

  Integer numerator;
  mpfr_get_z(numerator.get_mpz_t(), value.get(), MPFR_RNDN);

  Float residual(prec);
  mpfr_sub_z(residual.get(), value.get(), numerator.get_mpz_t(), MPFR_RNDN);
  if (mpfr_cmp_d(residual.get(), 0.25) > 0 || mpfr_cmp_d(residual.get(), -0.25) < 0) {
    throw std::runtime_error("bernoulli_abs_zeta: insufficient precision at n=" + std::to_string(n));
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (g != 1) {
    throw std::runtime_error("bernoulli_abs_zeta: numerator shares a factor with the denominator at n=" +
                             std::to_string(n));
  }
  return make_rational(numerator, denominator);
}

}  // namespace charlat
