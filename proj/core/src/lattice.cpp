#include "charlat/lattice.hpp"

#include "charlat/bernoulli.hpp"
#include "charlat/genus.hpp"
#include "charlat/plumbing.hpp"

#include <algorithm>
#include <utility>

namespace charlat {

OrdParameter make_ord(unsigned long m, const Integer& value) {
  if (m == 0) throw std::domain_error("make_ord: m must be positive");
  if (value <= 0) throw ConstraintViolation("ord([Sigma_Q]) must be positive");
  const std::string where = " (m=" + std::to_string(m) + ", ord=" + value.get_str() + ")";
  if (m % 2 == 1) {
    if (m == 5) {
      if (value != 1 && value != 2) throw ConstraintViolation("ord([Sigma_Q]) must be 1 or 2 for m=5" + where);
    } else if (value != 1) {
      throw ConstraintViolation("[Sigma_Q] is trivial for odd m != 5" + where);
    }
  } else if (m == 2 || m == 4) {
    if (value != 1) throw ConstraintViolation("[Sigma_Q] is trivial for m=2,4" + where);
  } else {
    const Integer jk = j_value(m / 2);
    if (mpz_divisible_p(Integer(jk * jk).get_mpz_t(), value.get_mpz_t()) == 0) {
      throw ConstraintViolation("ord([Sigma_Q]) must divide j_{m/2}^2 = " + Integer(jk * jk).get_str() + where);
    }
    if (nu2(value) > 2 * nu2(Integer(m)) + 4) {
      throw ConstraintViolation("v2(ord([Sigma_Q])) exceeds 2 v2(m) + 4" + where);
    }
  }
  return {m, value};
}

std::string KernelStructure::to_string() const {
  std::string out = "Z";
  if (free_rank == 2) out += "+Z";
  if (torsion == 2) out += "+Z/2";
  return out;
}

KernelStructure kernel_structure(const OrdParameter& ord) {
  const unsigned long m = ord.m;
  if (m < 2) throw std::domain_error("kernel_structure: m must be at least 2");
  make_ord(m, ord.value);
  if (m % 2 == 0) return {2, 1};
  if (m % 4 == 3) return {1, 1};
  if (m == 5) return {1, ord.value == 1 ? 2UL : 1UL};
  return {1, 2};
}

InvariantVector& InvariantVector::operator+=(const InvariantVector& o) {
  sigma += o.sigma;
  ahat += o.ahat;
  p_top += o.p_top;
  p_half_sq += o.p_half_sq;
  return *this;
}

InvariantVector operator*(const Integer& t, const InvariantVector& v) {
  return {t * v.sigma, t * v.ahat, t * v.p_top, t * v.p_half_sq};
}

LatticeVariant parse_variant(const std::string& name) {
  if (name == "full" || name == "full_kernel") return LatticeVariant::full_kernel;
  if (name == "sig4" || name == "signature_in_4Z") return LatticeVariant::signature_in_4Z;
  throw std::invalid_argument("unknown lattice variant '" + name + "'");
}

std::string variant_name(LatticeVariant v) {
  return v == LatticeVariant::full_kernel ? "full_kernel" : "signature_in_4Z";
}

namespace {

std::string second_label(unsigned long m, LatticeVariant variant) {
  const bool four = variant == LatticeVariant::signature_in_4Z;
  if (m == 2) return four ? "4*HP^2" : "HP^2";
  if (m == 4) return four ? "4*OP^2" : "OP^2";
  return "ord*(Q - s(Q)*P)";
}

}  // namespace

LatticeBasis generator_invariants(const OrdParameter& ord, LatticeVariant variant,
                                  const std::optional<BezoutPair>& bezout) {
  const unsigned long m = ord.m;
  if (m < 2) throw std::domain_error("generator_invariants: m must be at least 2");
  make_ord(m, ord.value);

  LatticeBasis basis{m, ord, variant, {}};
  const BernoulliRecord rec = bernoulli_record(m);

  if (m % 2 == 1) {
    basis.generators.push_back(
        {"(sigma_m/8)*P", {sigma(m), -2 * rec.num4, 2 * factorial(2 * m - 1) * rec.j, 0}});
    return basis;
  }

  const unsigned long k = m / 2;
  const BezoutPair pair = bezout ? *bezout : canonical_bezout(m);
  if (!pair.valid() || pair.for_numerator != rec.num4 || pair.for_denominator != rec.j) {
    throw std::domain_error("generator_invariants: not a Bezout pair for m=" + std::to_string(m));
  }

  basis.generators.push_back(
      {"(sigma_m/8)*P", {sigma(m), -rec.num4, factorial(4 * k - 1) * rec.j, 0}});

  const Integer a = a_coeff(k);
  const Integer mu = mu_coeff(k);
  const Rational scale = variant == LatticeVariant::full_kernel ? Rational(ord.value * a * a) / Rational(mu)
                                                                : Rational(ord.value * a * a * mu);
  const Rational bk = bernoulli_abs(k);
  const Rational beta = bk / Rational(Integer(4 * k));
  const Rational alt(k % 2 == 0 ? -1 : 1);  // (-1)^(k+1)
  const Rational twist = Rational(pair.d) * beta * (bk / rec.abs_value + alt);
  const Integer t = default_engine().tangent(k);
  const Integer f = factorial(2 * k - 1);

  InvariantVector second;
  second.sigma = to_integer(scale * (make_rational(t * t, 2) - 2 * Rational(sigma(m)) * twist));
  second.ahat = to_integer(2 * scale * Rational(rec.num4) * twist);
  second.p_top = to_integer(scale * (Rational(f * f) + Rational(factorial(4 * k - 1) * rec.j) * beta *
                                                           (Rational(pair.c) * beta - 2 * Rational(pair.d) * alt)));
  second.p_half_sq = to_integer(2 * scale * Rational(f * f));
  basis.generators.push_back({second_label(m, variant), std::move(second)});
  return basis;
}

MinimalSignature minimal_signature(const OrdParameter& ord) {
  const unsigned long m = ord.m;
  make_ord(m, ord.value);
  if (m == 1 || m == 2 || m == 4) return {1, std::nullopt};
  if (m % 2 == 1) return {sigma(m), std::nullopt};

  const Integer half = sigma(m / 2);
  Integer g;
  const Integer half_sq = half * half;
  const Integer full = sigma(m);
  mpz_gcd(g.get_mpz_t(), full.get_mpz_t(), half_sq.get_mpz_t());
  const long exponent = std::min(0L, nu2(ord.value) - 2 * nu2(Integer(m)) - 4 + 2 * nu2(Integer(a_coeff(m / 2))));
  const Integer divisor = pow2(static_cast<unsigned long>(-exponent));
  if (mpz_divisible_p(g.get_mpz_t(), divisor.get_mpz_t()) == 0) {
    throw std::logic_error("minimal_signature: 2^i_m gcd is not integral at m=" + std::to_string(m));
  }
  return {g / divisor, exponent};
}

Integer minimal_ahat(unsigned long m) {
  if (m < 2) throw std::domain_error("minimal_ahat: m must be at least 2");
  if (m % 2 == 1) return 2 * num4(m);
  const Integer half = num4(m / 2);
  const Integer half_sq = half * half;
  const Integer top = num4(m);
  Integer g;
  mpz_gcd(g.get_mpz_t(), top.get_mpz_t(), half_sq.get_mpz_t());
  return g;
}

Integer signature_divisibility_bound(unsigned long m) {
  if (m == 0 || m == 1 || m == 2 || m == 4) {
    throw std::domain_error("signature_divisibility_bound: undefined for m in {1, 2, 4}");
  }
  if (m % 2 == 1) return pow2(2 * m + 2);
  return pow2(2 * m - 2 * static_cast<unsigned long>(nu2(Integer(m))) - 3);
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Fold every lower row into the pivot row with unimodular 2x2 steps.
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      if (rows[pivot_row][col] == 0) {
        std::swap(rows[pivot_row], rows[r]);
        continue;
      }
      const Integer a = rows[pivot_row][col];
      const Integer b = rows[r][col];
      const GcdResult e = extended_gcd(a, b);
      const Integer a_g = a / e.g;
      const Integer b_g = b / e.g;
      for (std::size_t c = col; c < cols; ++c) {
        const Integer top = e.x * rows[pivot_row][c] + e.y * rows[r][c];
        const Integer bottom = -b_g * rows[pivot_row][c] + a_g * rows[r][c];
        rows[pivot_row][c] = top;
        rows[r][c] = bottom;
      }
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    const Integer& p = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= q * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

namespace {

std::vector<std::vector<Integer>> as_rows(const LatticeBasis& b) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : b.generators) {
    const InvariantVector& v = g.invariants;
    rows.push_back({v.sigma, v.ahat, v.p_top, v.p_half_sq});
  }
  return rows;
}

}  // namespace

bool lattice_span_equal(const LatticeBasis& a, const LatticeBasis& b) {
  return hermite_normal_form(as_rows(a)) == hermite_normal_form(as_rows(b));
}

}  // namespace charlat
