#include "charlat/genus.hpp"

#include "charlat/bernoulli.hpp"
#include "charlat/plumbing.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace charlat;

namespace {

Rational q(long num, long den) { return make_rational(num, den); }

}  // namespace

TEST(SCoefficients, Examples) {
  EXPECT_EQ(shat(1), q(-1, 24));
  EXPECT_EQ(s_coeff(1), q(1, 3));
  EXPECT_EQ(s_coeff(2), q(7, 45));
  EXPECT_EQ(s_coeff(3), q(62, 945));
  EXPECT_EQ(s_coeff(4), q(381, 14175));
}

TEST(SCoefficients, ClosedFormsAgree) {
  for (unsigned long n = 1; n <= 300; ++n) ASSERT_EQ(s_coeff(n), s_coeff_via_sigma(n)) << n;
}

TEST(SCoefficients, ShatFromOracle) {
  const auto b = oracle::abs_even_bernoulli(40);
  for (unsigned long n = 1; n <= 40; ++n) {
    const Rational expected = -oracle::over_4n(b[n], n) / Rational(factorial(2 * n - 1));
    EXPECT_EQ(shat(n), expected) << n;
  }
}

// Classical low-degree genera, written out by hand:
//   L_1 = p1/3, L_2 = (7 p2 - p1^2)/45, L_4 restricted = (381 p4 - 19 p2^2)/14175,
//   A_1 = -p1/24, A_2 = (-4 p2 + 7 p1^2)/5760, ph_1 = p1, ph_2 = (p1^2 - 2 p2)/12.
TEST(GenusCoeffs, ClassicalLowDegree) {
  EXPECT_EQ(genus_coeffs(Genus::L, 1), (GenusCoefficients{1, q(1, 3), 0}));
  EXPECT_EQ(genus_coeffs(Genus::L, 2), (GenusCoefficients{2, q(7, 45), q(-1, 45)}));
  EXPECT_EQ(genus_coeffs(Genus::L, 4), (GenusCoefficients{4, q(381, 14175), q(-19, 14175)}));
  EXPECT_EQ(genus_coeffs(Genus::Ahat, 1), (GenusCoefficients{1, q(-1, 24), 0}));
  EXPECT_EQ(genus_coeffs(Genus::Ahat, 2), (GenusCoefficients{2, q(-4, 5760), q(7, 5760)}));
  EXPECT_EQ(genus_coeffs(Genus::Ph, 1), (GenusCoefficients{1, 1, 0}));
  EXPECT_EQ(genus_coeffs(Genus::Ph, 2), (GenusCoefficients{2, q(-1, 6), q(1, 12)}));
  EXPECT_EQ(genus_coeffs(Genus::Ph, 3), (GenusCoefficients{3, q(1, 120), 0}));
}

// (A ph)_2 = ph_2 + A_1 ph_1; (A ph)_4 restricted to {p4, p2^2} picks up A_2|p2 * ph_2|p2.
TEST(GenusCoeffs, AhatPhProducts) {
  const GenusCoefficients two = genus_coeffs(Genus::AhatPh, 2);
  EXPECT_EQ(two.coeff_p_top, q(-1, 6));
  EXPECT_EQ(two.coeff_p_half_sq, q(1, 12) + q(-1, 24) * 1);

  const GenusCoefficients four = genus_coeffs(Genus::AhatPh, 4);
  const GenusCoefficients ph4 = genus_coeffs(Genus::Ph, 4);
  const Rational a2_p2 = genus_coeffs(Genus::Ahat, 2).coeff_p_top;
  const Rational ph2_p2 = genus_coeffs(Genus::Ph, 2).coeff_p_top;
  EXPECT_EQ(four.coeff_p_top, ph4.coeff_p_top);
  EXPECT_EQ(four.coeff_p_half_sq, ph4.coeff_p_half_sq + a2_p2 * ph2_p2);
}

TEST(GenusCoeffs, OddHasNoHalfSquare) {
  for (unsigned long m = 1; m <= 99; m += 2) {
    for (auto g : {Genus::L, Genus::Ahat, Genus::Ph, Genus::AhatPh}) {
      EXPECT_EQ(genus_coeffs(g, m).coeff_p_half_sq, 0) << m;
    }
  }
}

TEST(GenusCoeffs, Evaluate) {
  const GenusCoefficients l2 = genus_coeffs(Genus::L, 2);
  EXPECT_EQ(l2.evaluate(7, 4), 1);  // quaternionic projective plane
  EXPECT_EQ(l2.evaluate(0, 0), 0);
}

TEST(GenusNames, RoundTrip) {
  for (auto g : {Genus::L, Genus::Ahat, Genus::Ph, Genus::AhatPh}) EXPECT_EQ(parse_genus(genus_name(g)), g);
  EXPECT_THROW(parse_genus("Todd"), std::invalid_argument);
}

TEST(Stolz, NoTopCoefficient) {
  for (unsigned long m = 1; m <= 300; ++m) {
    const BezoutPair b = canonical_bezout(m);
    const GenusCoefficients s = stolz_class_coeffs(m, b);
    ASSERT_EQ(s.coeff_p_top, 0) << m;
    if (m % 2 == 1) ASSERT_EQ(s.coeff_p_half_sq, 0) << m;
    if (m <= 60) {
      for (long t : {-2L, -1L, 1L, 2L}) ASSERT_EQ(stolz_class_coeffs(m, b.shifted(t)).coeff_p_top, 0) << m << ' ' << t;
    }
  }
}

TEST(Stolz, QuaternionicCheck) {
  const GenusCoefficients s2 = stolz_class_coeffs(2, canonical_bezout(2));
  EXPECT_EQ(s2.evaluate(0, 32), 8);
  EXPECT_EQ(stolz_s(0, s2.evaluate(0, 32)), -1);
}

TEST(Stolz, RejectsForeignPair) {
  EXPECT_THROW(stolz_class_coeffs(6, normalize_bezout(1, 24)), std::domain_error);
  BezoutPair broken = canonical_bezout(6);
  broken.d += 1;
  EXPECT_THROW(stolz_class_coeffs(6, broken), std::domain_error);
}

TEST(P2k, FirstCase) {
  const P2kSolution s = p2k_solve(1);
  EXPECT_EQ(s.p2k_per_L, q(45, 7));
  EXPECT_EQ(s.p2k_per_pk2, q(1, 7));
  EXPECT_EQ(s.ahat_per_L, q(-1, 224));
  EXPECT_EQ(s.ahat_per_pk2, q(1, 896));
}

TEST(P2k, RecombinesToAhat) {
  for (unsigned long k = 1; k <= 60; ++k) {
    const P2kSolution s = p2k_solve(k);
    const GenusCoefficients l = genus_coeffs(Genus::L, 2 * k);
    const GenusCoefficients a = genus_coeffs(Genus::Ahat, 2 * k);
    // Ahat = ahat_per_L * L + ahat_per_pk2 * p_k^2, compared monomial by monomial.
    EXPECT_EQ(s.ahat_per_L * l.coeff_p_top, a.coeff_p_top) << k;
    EXPECT_EQ(s.ahat_per_L * l.coeff_p_half_sq + s.ahat_per_pk2, a.coeff_p_half_sq) << k;
    EXPECT_EQ(s.p2k_per_L * l.coeff_p_top, 1) << k;
    EXPECT_EQ(s.p2k_per_L * l.coeff_p_half_sq + s.p2k_per_pk2, 0) << k;

    const AhatInL t = ahat_via_tangent(k);
    EXPECT_EQ(t.per_L, s.ahat_per_L) << k;
    EXPECT_EQ(t.per_pk2, s.ahat_per_pk2) << k;
  }
}

TEST(ProofIdentities, HalfS2k) {
  for (unsigned long k = 1; k <= 200; ++k) {
    const unsigned long m = 2 * k;
    const BezoutPair b = canonical_bezout(m);
    const Rational lhs = s_coeff(m) / 2;
    const Rational rhs = Rational(sigma(m) * b.d) / Rational(2 * factorial(4 * k - 1)) -
                         Rational(sigma(m) * b.c) * shat(m) / 2;
    ASSERT_EQ(lhs, rhs) << k;
  }
}

TEST(ProofIdentities, SigmaC) {
  for (unsigned long k = 1; k <= 200; ++k) {
    const unsigned long m = 2 * k;
    const BezoutPair b = canonical_bezout(m);
    ASSERT_EQ(sigma(m) * b.c, pow2(4 * k + 1) * (pow2(4 * k - 1) - 1) * (1 - j_value(m) * b.d)) << k;
  }
}
