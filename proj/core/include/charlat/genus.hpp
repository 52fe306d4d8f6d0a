#pragma once

// Genera restricted to highly connected 4m-manifolds.
//
// On such a manifold every Pontryagin class vanishes except the top one p_m
// and, for m = 2k, the middle one p_k. A degree-4m polynomial therefore
// reduces to  coeff_p_top * p_m + coeff_p_half_sq * p_k^2.

#include "charlat/exact.hpp"

#include <string_view>

namespace charlat {

enum class Genus { L, Ahat, Ph, AhatPh };

/// Parses "L", "Ahat", "Ph", "AhatPh".
Genus parse_genus(std::string_view name);
std::string_view genus_name(Genus genus);

struct GenusCoefficients {
  unsigned long degree_m = 0;
  Rational coeff_p_top;
  Rational coeff_p_half_sq;  // zero when m is odd

  /// coeff_p_top * p_top + coeff_p_half_sq * p_half_sq.
  Rational evaluate(const Integer& p_top, const Integer& p_half_sq) const {
    return coeff_p_top * p_top + coeff_p_half_sq * p_half_sq;
  }

  friend bool operator==(const GenusCoefficients&, const GenusCoefficients&) = default;
};

/// shat_n = -|B_2n| / (4n (2n-1)!), the p_n coefficient of the A-hat class.
Rational shat(unsigned long n);

/// s_n = -2^(2n+1) (2^(2n-1) - 1) shat_n, the p_n coefficient of the L class.
Rational s_coeff(unsigned long n);

/// s_n = sigma_n / (a_n (2n-1)! j_n); the second closed form, kept separate
/// so the two can be checked against each other.
Rational s_coeff_via_sigma(unsigned long n);

GenusCoefficients genus_coeffs(Genus genus, unsigned long m);

/// S_m = L_m + (sigma_m / a_m) (c A-hat_m + (-1)^m d (A-hat ph)_m) for the
/// given Bezout pair of (num(|B_2m|/4m), j_m). Throws std::domain_error if the
/// pair is not a valid Bezout pair for exactly those two numbers.
GenusCoefficients stolz_class_coeffs(unsigned long m, const BezoutPair& bezout);

/// The canonical (normalized) Bezout pair for num/denom of |B_2m| / 4m.
BezoutPair canonical_bezout(unsigned long m);

/// Solutions of L_2k for p_2k and of A-hat_2k in the basis {L_2k, p_k^2}:
///   p_2k   = p2k_per_L * L_2k + p2k_per_pk2 * p_k^2
///   Ahat_2k = ahat_per_L * L_2k + ahat_per_pk2 * p_k^2
struct P2kSolution {
  Rational p2k_per_L;
  Rational p2k_per_pk2;
  Rational ahat_per_L;
  Rational ahat_per_pk2;
};

/// Built from the s / shat coefficients.
P2kSolution p2k_solve(unsigned long k);

/// The A-hat half of p2k_solve written through tangent numbers:
///   T_k^2 / ((2k-1)!^2 2^(4k+3) (2^(4k-1) - 1))  on p_k^2,
///   -1 / (2^(4k+1) (2^(4k-1) - 1))             on L_2k.
struct AhatInL {
  Rational per_L;
  Rational per_pk2;
};
AhatInL ahat_via_tangent(unsigned long k);

}  // namespace charlat
