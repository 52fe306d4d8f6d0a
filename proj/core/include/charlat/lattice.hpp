#pragma once

// Characteristic-number lattices of closed (2m-1)-connected 4m-manifolds.

#include "charlat/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charlat {

/// Raised when an ord([Sigma_Q]) value is incompatible with what is known
/// about the class for the given m.
class ConstraintViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ord([Sigma_Q]) in coker(J)_{4m-1}. Construct through make_ord().
struct OrdParameter {
  unsigned long m = 0;
  Integer value = 1;
};

/// Validates and wraps an order:
///   m odd, m != 5        -> must be 1
///   m = 5                -> 1 or 2 (Q has order 2 there, so 2 [Sigma_Q] = 0)
///   m in {2, 4}          -> must be 1
///   m even otherwise     -> divides j_{m/2}^2 and v2(value) <= 2 v2(m) + 4
OrdParameter make_ord(unsigned long m, const Integer& value = 1);

struct KernelStructure {
  unsigned free_rank = 0;
  unsigned long torsion = 1;  // 1 (none) or 2 (a Z/2 summand generated by Q)

  std::string to_string() const;  // "Z", "Z+Z/2", "Z+Z"
  friend bool operator==(const KernelStructure&, const KernelStructure&) = default;
};

/// Isomorphism type of Omega^<2m-1>_4m / Theta_4m, m >= 2.
KernelStructure kernel_structure(const OrdParameter& ord);

struct InvariantVector {
  Integer sigma;
  Integer ahat;
  Integer p_top;      // p_m (m odd) or p_2k (m = 2k)
  Integer p_half_sq;  // p_k^2, zero for m odd

  InvariantVector& operator+=(const InvariantVector& o);
  friend InvariantVector operator*(const Integer& t, const InvariantVector& v);
  friend InvariantVector operator+(InvariantVector a, const InvariantVector& b) { return a += b; }
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

enum class LatticeVariant { full_kernel, signature_in_4Z };

LatticeVariant parse_variant(const std::string& name);  // "full" | "sig4"
std::string variant_name(LatticeVariant v);

struct LatticeGenerator {
  std::string label;
  InvariantVector invariants;
};

struct LatticeBasis {
  unsigned long m = 0;
  OrdParameter ord;
  LatticeVariant variant = LatticeVariant::full_kernel;
  std::vector<LatticeGenerator> generators;  // (sigma_m/8) P first
};

/// Generators of the lattice of (sigma, A-hat, p_top, p_half^2) realized by
/// closed highly connected 4m-manifolds (m >= 2). Rank 1 for m odd, rank 2
/// for m even. bezout is the pair for (num(|B_2m|/4m), j_m); defaults to the
/// canonical one. Only the spanned subgroup is independent of that choice.
LatticeBasis generator_invariants(const OrdParameter& ord, LatticeVariant variant,
                                  const std::optional<BezoutPair>& bezout = std::nullopt);

struct MinimalSignature {
  Integer value;
  std::optional<long> exponent;  // i_m, reported for even m outside {2, 4}
};

MinimalSignature minimal_signature(const OrdParameter& ord);

/// Minimal positive A-hat genus, m >= 2.
Integer minimal_ahat(unsigned long m);

/// 2^(2m+2) for m odd, 2^(2m - 2 v2(m) - 3) for m even; m not in {1, 2, 4}.
Integer signature_divisibility_bound(unsigned long m);

/// Row-style Hermite normal form of an integer matrix, zero rows dropped.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

/// True iff both bases span the same subgroup of Z^4.
bool lattice_span_equal(const LatticeBasis& a, const LatticeBasis& b);

}  // namespace charlat
