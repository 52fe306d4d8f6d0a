#include "charlat/bundle.hpp"

#include "charlat/bernoulli.hpp"
#include "charlat/genus.hpp"
#include "charlat/plumbing.hpp"

#include <algorithm>

namespace charlat {

Integer bundle_signature_divisor(const OrdParameter& ord) {
  make_ord(ord.m, ord.value);
  if (ord.m == 1 || ord.m == 2 || ord.m == 4) return 4;
  return minimal_signature(ord).value;
}

Integer bundle_ahat_divisor(unsigned long m) { return minimal_ahat(m); }

bool signature_4_realizable(unsigned long m) { return m == 1 || m == 2 || m == 4; }

DivisibilityReport bundle_report(const OrdParameter& ord) {
  DivisibilityReport out;
  out.m = ord.m;
  out.ord = make_ord(ord.m, ord.value);
  out.signature_divisor = bundle_signature_divisor(ord);
  if (ord.m >= 2) out.ahat_divisor = bundle_ahat_divisor(ord.m);
  if (mpz_even_p(out.signature_divisor.get_mpz_t())) out.non_admissible_divisor = out.signature_divisor / 2;
  out.realizable_at_genus = ord.m == 1 ? "g(M) >= 3" : "g(M) >= 5";
  return out;
}

std::vector<KappaExpression> kappa_basis(const OrdParameter& ord, const std::optional<BezoutPair>& bezout) {
  const unsigned long m = ord.m;
  make_ord(m, ord.value);
  if (m == 1) return {{"kappa_{p_1}/12", make_rational(1, 12), 0}};

  const BernoulliRecord rec = bernoulli_record(m);
  if (m % 2 == 1) {
    return {{"kappa_{p_m}/(2(2m-1)! j_m)", make_rational(1, 2 * factorial(2 * m - 1) * rec.j), 0}};
  }

  const unsigned long k = m / 2;
  const BezoutPair pair = bezout ? *bezout : canonical_bezout(m);
  if (!pair.valid() || pair.for_numerator != rec.num4 || pair.for_denominator != rec.j) {
    throw std::domain_error("kappa_basis: not a Bezout pair for m=" + std::to_string(m));
  }
  const Integer f = factorial(2 * k - 1);
  const Integer top_fact = factorial(4 * k - 1);
  const Integer a = a_coeff(k);
  const Integer mu = mu_coeff(k);
  const Rational beta = bernoulli_abs(k) / Rational(Integer(4 * k));
  const Rational sign(k % 2 == 0 ? 1 : -1);  // (-1)^k

  KappaExpression first{"kappa_{p_k^2}/(2 mu_k a_k^2 ord (2k-1)!^2)", 0,
                        make_rational(1, 2 * mu * a * a * ord.value * f * f)};

  const Rational denom_2k(2 * top_fact * rec.j);
  KappaExpression second{"(2 kappa_{p_2k} - kappa_{p_k^2})/(2(4k-1)! j_2k) - correction", 0, 0};
  second.coeff_p_top = Rational(2) / denom_2k;
  second.coeff_p_half_sq = Rational(-1) / denom_2k -
                           beta * (Rational(pair.c) * beta + 2 * Rational(pair.d) * sign) / Rational(2 * f * f);
  return {first, second};
}

std::vector<KappaExpression> kappa_basis_generator_order(const OrdParameter& ord,
                                                         const std::optional<BezoutPair>& bezout) {
  auto out = kappa_basis(ord, bezout);
  std::reverse(out.begin(), out.end());
  return out;
}

Rational pairing(const KappaExpression& expr, const InvariantVector& v) {
  return expr.coeff_p_top * Rational(v.p_top) + expr.coeff_p_half_sq * Rational(v.p_half_sq);
}

std::vector<std::vector<Rational>> pairing_matrix(const std::vector<KappaExpression>& exprs, const LatticeBasis& basis) {
  std::vector<std::vector<Rational>> out;
  for (const auto& e : exprs) {
    auto& row = out.emplace_back();
    for (const auto& g : basis.generators) row.push_back(pairing(e, g.invariants));
  }
  return out;
}

std::string kappa_genus_threshold(unsigned long m) { return m == 1 ? "g(M) >= 5" : "g(M) >= 7"; }

}  // namespace charlat
