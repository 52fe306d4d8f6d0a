#pragma once

// Divisibility of signatures and A-hat genera of total spaces of bundles over
// surfaces with highly connected almost parallelizable (4m-2)-dimensional
// fibre, and the integral kappa-class basis of H^2(BDiff)_free.
//
// All statements hold for admissible bundles; admissibility itself is a
// property of the caller's bundle and is not decided here.

#include "charlat/exact.hpp"
#include "charlat/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charlat {

struct DivisibilityReport {
  unsigned long m = 0;
  OrdParameter ord;
  Integer signature_divisor;
  std::optional<Integer> ahat_divisor;  // m >= 2
  /// signature_divisor / 2 when even: the bound that survives without the
  /// admissibility assumption.
  std::optional<Integer> non_admissible_divisor;
  std::string realizable_at_genus;  // "g(M) >= 5", or "g(M) >= 3" for m = 1
};

Integer bundle_signature_divisor(const OrdParameter& ord);
Integer bundle_ahat_divisor(unsigned long m);
bool signature_4_realizable(unsigned long m);
DivisibilityReport bundle_report(const OrdParameter& ord);

/// coeff_p_top * kappa_{p_top} + coeff_p_half_sq * kappa_{p_half^2}.
struct KappaExpression {
  std::string label;
  Rational coeff_p_top;
  Rational coeff_p_half_sq;
};

/// Integral basis of H^2(BDiff(M, D^{4m-2}); Z)_free. m = 1 yields kappa_{p_1}/12.
std::vector<KappaExpression> kappa_basis(const OrdParameter& ord,
                                         const std::optional<BezoutPair>& bezout = std::nullopt);

/// kappa_basis lists the p_k^2 expression first while generator_invariants
/// lists the P multiple first. This is the same basis reordered so entry i is
/// dual to generator i.
std::vector<KappaExpression> kappa_basis_generator_order(const OrdParameter& ord,
                                                         const std::optional<BezoutPair>& bezout = std::nullopt);

Rational pairing(const KappaExpression& expr, const InvariantVector& v);

/// M[i][j] = pairing(exprs[i], generators[j]).
std::vector<std::vector<Rational>> pairing_matrix(const std::vector<KappaExpression>& exprs, const LatticeBasis& basis);

/// Applicability threshold of kappa_basis: "g(M) >= 7", or "g(M) >= 5" for m = 1.
std::string kappa_genus_threshold(unsigned long m);

}  // namespace charlat
