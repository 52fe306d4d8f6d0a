#include "charlat/plumbing.hpp"

#include "charlat/bernoulli.hpp"
#include "charlat/genus.hpp"

#include <stdexcept>
#include <string>

namespace charlat {

namespace {

void require_pair_for(unsigned long m, const BezoutPair& bezout) {
  const BernoulliRecord rec = bernoulli_record(m);
  if (!bezout.valid() || bezout.for_numerator != rec.num4 || bezout.for_denominator != rec.j) {
    throw std::domain_error("not a Bezout pair for num/denom of |B_2m|/4m at m=" + std::to_string(m));
  }
}

}  // namespace

Integer sigma_from_num4(unsigned long m, const Integer& num4_m) {
  if (m == 0) throw std::domain_error("sigma: m must be positive");
  return Integer(a_coeff(m)) * pow2(2 * m + 1) * (pow2(2 * m - 1) - 1) * num4_m;
}

Integer sigma(unsigned long m) {
  if (m == 0) throw std::domain_error("sigma: m must be positive");
  return sigma_from_num4(m, num4(m));
}

DimensionProfile profile(unsigned long m) {
  if (m == 0) throw std::domain_error("profile: m must be positive");
  const BernoulliRecord rec = bernoulli_record(m);
  DimensionProfile out;
  out.m = m;
  out.odd = m % 2 == 1;
  out.a = a_coeff(m);
  out.sigma_m = sigma(m);
  out.j_m = rec.j;
  out.num4_m = rec.num4;
  if (!out.odd) {
    const unsigned long k = m / 2;
    out.even = DimensionProfile::Even{k, lambda_coeff(k), mu_coeff(k), normalize_bezout(rec.num4, rec.j)};
  }
  return out;
}

Integer bp_order(unsigned long m) {
  if (m == 0) throw std::domain_error("bp_order: m must be positive");
  Integer s = sigma(m);
  if (mpz_divisible_ui_p(s.get_mpz_t(), 8) == 0) throw std::logic_error("sigma_m is not divisible by 8");
  return s / 8;
}

Integer pk2_of_Q(unsigned long k) {
  if (k == 0) throw std::domain_error("pk2_of_Q: k must be positive");
  const Integer f = factorial(2 * k - 1);
  const Integer la = Integer(lambda_coeff(k) * a_coeff(k));
  return 2 * la * la * f * f;
}

Rational s_of_Q_first_formula(unsigned long k, const BezoutPair& bezout_2k) {
  require_pair_for(2 * k, bezout_2k);
  const BernoulliRecord rk = bernoulli_record(k);
  const Integer lambda(lambda_coeff(k));
  const Integer a(a_coeff(k));
  const Integer sign = k % 2 == 0 ? 1 : -1;
  const Integer sk = sigma(k);
  const Integer inner = bezout_2k.c * rk.num4 + 2 * sign * bezout_2k.d * rk.j;
  const Integer bracket = sk * sk + a * a * sigma(2 * k) * rk.num4 * inner;
  return -make_rational(lambda * lambda * bracket, 8 * rk.j * rk.j);
}

Rational s_of_Q_second_formula(unsigned long k, const BezoutPair& bezout_2k) {
  require_pair_for(2 * k, bezout_2k);
  const Rational bk = bernoulli_abs(k);
  const Rational b2k = bernoulli_abs(2 * k);
  const Rational beta = bk / Rational(Integer(4 * k));
  const Rational sign(k % 2 == 0 ? -1 : 1);  // (-1)^(k+1)
  const Integer t = default_engine().tangent(k);
  const Integer la = Integer(lambda_coeff(k) * a_coeff(k));

  const Rational first = Rational(sigma(2 * k) * bezout_2k.d) * beta * (bk / b2k + sign);
  const Rational second = make_rational(t * t, 4);
  return make_rational(la * la, 4) * (first - second);
}

Integer s_of_Q(unsigned long m, const BezoutPair& bezout) {
  if (m < 2) throw std::domain_error("s_of_Q: m must be at least 2");
  if (m % 2 == 1) return 0;
  const unsigned long k = m / 2;
  const Rational first = s_of_Q_first_formula(k, bezout);
  const Rational second = s_of_Q_second_formula(k, bezout);
  if (first != second) {
    throw std::logic_error("s(Q) formulas disagree at m=" + std::to_string(m) + ": " + first.get_str() +
                           " vs " + second.get_str());
  }
  if (!is_integral(first)) {
    throw std::logic_error("s(Q) is not integral at m=" + std::to_string(m) + ": " + first.get_str());
  }
  return first.get_num();
}

Integer s_of_Q(unsigned long m) {
  if (m < 2) throw std::domain_error("s_of_Q: m must be at least 2");
  if (m % 2 == 1) return 0;
  return s_of_Q(m, canonical_bezout(m));
}

Integer stolz_s(const Integer& signature, const Rational& stolz_evaluation) {
  const Rational diff = (Rational(signature) - stolz_evaluation) / 8;
  if (!is_integral(diff)) {
    throw std::invalid_argument("stolz_s: sigma(M) - <S_m(M)> = " + Rational(Rational(signature) - stolz_evaluation).get_str() +
                                " is not divisible by 8");
  }
  return diff.get_num();
}

}  // namespace charlat
