#pragma once

// Numeric invariants of the plumbings P (E8) and Q (hyperbolic), and the
// constants sigma_m, a_m, lambda_k, mu_k built from Bernoulli numbers.

#include "charlat/exact.hpp"

#include <optional>

namespace charlat {

/// a_m = 2 for m odd, 1 for m even.
inline unsigned long a_coeff(unsigned long m) { return m % 2 == 1 ? 2 : 1; }

/// lambda_k = mu_k = 2 for k in {1, 2}, else 1.
inline unsigned long lambda_coeff(unsigned long k) { return (k == 1 || k == 2) ? 2 : 1; }
inline unsigned long mu_coeff(unsigned long k) { return (k == 1 || k == 2) ? 2 : 1; }

/// sigma_m = a_m 2^(2m+1) (2^(2m-1) - 1) num(|B_2m| / 4m): the minimal positive
/// signature of an almost parallelizable 4m-manifold.
Integer sigma(unsigned long m);
/// Same formula with num(|B_2m| / 4m) supplied by the caller.
Integer sigma_from_num4(unsigned long m, const Integer& num4);

struct DimensionProfile {
  unsigned long m = 0;
  bool odd = false;
  unsigned long a = 0;
  Integer sigma_m;
  Integer j_m;
  Integer num4_m;

  // Present exactly when m = 2k is even.
  struct Even {
    unsigned long k = 0;
    unsigned long lambda = 0;
    unsigned long mu = 0;
    BezoutPair bezout_2k;  // canonical pair for (num(|B_4k|/8k), j_2k)
  };
  std::optional<Even> even;
};

DimensionProfile profile(unsigned long m);

/// |bP_4m| = sigma_m / 8. At m = 1 this is the bare formula value 2 (bP_4 itself
/// is trivial).
Integer bp_order(unsigned long m);

/// p_k^2(Q) = 2 lambda_k^2 a_k^2 (2k-1)!^2.
Integer pk2_of_Q(unsigned long k);

/// Both closed forms of Stolz's invariant s(Q) for m = 2k, kept apart so
/// callers (and tests) can compare them.
Rational s_of_Q_first_formula(unsigned long k, const BezoutPair& bezout_2k);
Rational s_of_Q_second_formula(unsigned long k, const BezoutPair& bezout_2k);

/// s(Q): zero for m odd. For m = 2k evaluates both formulas and throws
/// std::logic_error if they disagree or are not integral. bezout is the pair
/// for (num(|B_2m|/4m), j_m) and is ignored for m odd.
Integer s_of_Q(unsigned long m, const BezoutPair& bezout);
Integer s_of_Q(unsigned long m);  // canonical pair

/// s(M) = (sigma(M) - <S_m(M), [M, dM]>) / 8. Throws std::invalid_argument
/// if the difference is not an integer multiple of 8.
Integer stolz_s(const Integer& signature, const Rational& stolz_evaluation);

}  // namespace charlat
