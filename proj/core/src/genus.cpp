#include "charlat/genus.hpp"

#include "charlat/bernoulli.hpp"
#include "charlat/plumbing.hpp"

#include <stdexcept>
#include <string>

namespace charlat {

namespace {

Rational sign_power(unsigned long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational inverse_factorial(unsigned long n) { return make_rational(1, factorial(n)); }

}  // namespace

Genus parse_genus(std::string_view name) {
  if (name == "L") return Genus::L;
  if (name == "Ahat") return Genus::Ahat;
  if (name == "Ph") return Genus::Ph;
  if (name == "AhatPh") return Genus::AhatPh;
  throw std::invalid_argument("unknown genus '" + std::string(name) + "'");
}

std::string_view genus_name(Genus genus) {
  switch (genus) {
    case Genus::L: return "L";
    case Genus::Ahat: return "Ahat";
    case Genus::Ph: return "Ph";
    case Genus::AhatPh: return "AhatPh";
  }
  return "?";
}

Rational shat(unsigned long n) {
  if (n == 0) throw std::domain_error("shat: index must be positive");
  return -bernoulli_abs(n) / Rational(Integer(4 * n) * factorial(2 * n - 1));
}

Rational s_coeff(unsigned long n) {
  return Rational(-pow2(2 * n + 1) * (pow2(2 * n - 1) - 1)) * shat(n);
}

Rational s_coeff_via_sigma(unsigned long n) {
  const BernoulliRecord rec = bernoulli_record(n);
  return make_rational(sigma(n), Integer(a_coeff(n)) * factorial(2 * n - 1) * rec.j);
}

GenusCoefficients genus_coeffs(Genus genus, unsigned long m) {
  if (m == 0) throw std::domain_error("genus_coeffs: degree must be positive");
  GenusCoefficients out{m, 0, 0};
  if (m % 2 == 1) {
    switch (genus) {
      case Genus::L: out.coeff_p_top = s_coeff(m); break;
      case Genus::Ahat: out.coeff_p_top = shat(m); break;
      case Genus::Ph:
      case Genus::AhatPh: out.coeff_p_top = sign_power(m + 1) * inverse_factorial(2 * m - 1); break;
    }
    return out;
  }

  const unsigned long k = m / 2;
  const Rational ph_top = -inverse_factorial(4 * k - 1);
  const Rational ph_half = inverse_factorial(4 * k - 1) / 2;
  switch (genus) {
    case Genus::L: {
      const Rational sk = s_coeff(k), s2k = s_coeff(m);
      out.coeff_p_top = s2k;
      out.coeff_p_half_sq = (sk * sk - s2k) / 2;
      break;
    }
    case Genus::Ahat: {
      const Rational sk = shat(k), s2k = shat(m);
      out.coeff_p_top = s2k;
      out.coeff_p_half_sq = (sk * sk - s2k) / 2;
      break;
    }
    case Genus::Ph:
      out.coeff_p_top = ph_top;
      out.coeff_p_half_sq = ph_half;
      break;
    case Genus::AhatPh:
      out.coeff_p_top = ph_top;
      out.coeff_p_half_sq = sign_power(k + 1) * shat(k) * inverse_factorial(2 * k - 1) + ph_half;
      break;
  }
  return out;
}

BezoutPair canonical_bezout(unsigned long m) {
  const BernoulliRecord rec = bernoulli_record(m);
  return normalize_bezout(rec.num4, rec.j);
}

GenusCoefficients stolz_class_coeffs(unsigned long m, const BezoutPair& bezout) {
  const BernoulliRecord rec = bernoulli_record(m);
  if (!bezout.valid() || bezout.for_numerator != rec.num4 || bezout.for_denominator != rec.j) {
    throw std::domain_error("stolz_class_coeffs: not a Bezout pair for num/denom of |B_2m|/4m at m=" +
                            std::to_string(m));
  }
  const GenusCoefficients l = genus_coeffs(Genus::L, m);
  const GenusCoefficients ahat = genus_coeffs(Genus::Ahat, m);
  const GenusCoefficients ahat_ph = genus_coeffs(Genus::AhatPh, m);
  const Rational scale = make_rational(sigma(m), a_coeff(m));
  const Rational c(bezout.c);
  const Rational d = sign_power(m) * Rational(bezout.d);

  GenusCoefficients out{m, 0, 0};
  out.coeff_p_top = l.coeff_p_top + scale * (c * ahat.coeff_p_top + d * ahat_ph.coeff_p_top);
  out.coeff_p_half_sq = l.coeff_p_half_sq + scale * (c * ahat.coeff_p_half_sq + d * ahat_ph.coeff_p_half_sq);
  return out;
}

P2kSolution p2k_solve(unsigned long k) {
  if (k == 0) throw std::domain_error("p2k_solve: k must be positive");
  const Rational sk = s_coeff(k), s2k = s_coeff(2 * k);
  const Rational hk = shat(k), h2k = shat(2 * k);
  P2kSolution out;
  out.p2k_per_L = 1 / s2k;
  out.p2k_per_pk2 = -(sk * sk - s2k) / (2 * s2k);
  out.ahat_per_pk2 = (s2k * hk * hk - h2k * sk * sk) / (2 * s2k);
  out.ahat_per_L = h2k / s2k;
  return out;
}

AhatInL ahat_via_tangent(unsigned long k) {
  if (k == 0) throw std::domain_error("ahat_via_tangent: k must be positive");
  const Integer t = default_engine().tangent(k);
  const Integer mersenne = pow2(4 * k - 1) - 1;
  const Integer fact = factorial(2 * k - 1);
  AhatInL out;
  out.per_pk2 = make_rational(t * t, fact * fact * pow2(4 * k + 3) * mersenne);
  out.per_L = make_rational(-1, pow2(4 * k + 1) * mersenne);
  return out;
}

}  // namespace charlat
