#include "charlat/verify.hpp"

#include "charlat/serialize.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace charlat;

namespace {

std::string canonical(const VerificationReport& r) { return to_json(r, false).dump(); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "charlat-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST(GcdScan, DeskRange) {
  const VerificationReport r = verify_gcd_power_of_two({.m_max = 300});
  EXPECT_EQ(r.status, VerificationStatus::verified);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.checked, 150U);
  EXPECT_EQ(r.checkpoint_cursor, 301U);
  EXPECT_EQ(r.claim, "gcd-power-of-two");
}

TEST(GcdScan, Smallest) {
  const VerificationReport r = verify_gcd_power_of_two({.m_max = 2});
  EXPECT_EQ(r.status, VerificationStatus::verified);
  EXPECT_EQ(r.checked, 1U);
  EXPECT_FALSE(check_gcd_power_of_two_at(2));
  EXPECT_THROW(check_gcd_power_of_two_at(3), std::domain_error);
}

TEST(GcdScan, AlgorithmsAgree) {
  const auto a = verify_gcd_power_of_two({.m_max = 200, .algorithm = BernoulliAlgorithm::triangle});
  const auto b = verify_gcd_power_of_two({.m_max = 200, .algorithm = BernoulliAlgorithm::zeta});
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.counterexamples, b.counterexamples);
}

TEST(CoprimalityScan, DeskRange) {
  const VerificationReport r = verify_numerator_coprimality({.m_max = 300});
  EXPECT_EQ(r.status, VerificationStatus::verified);
  EXPECT_EQ(r.checked, 150U);
  EXPECT_EQ(verify_numerator_coprimality({.m_max = 2}).status, VerificationStatus::verified);
  EXPECT_FALSE(check_numerator_coprimality_at(12));
  const auto zeta = verify_numerator_coprimality({.m_max = 300, .algorithm = BernoulliAlgorithm::zeta});
  EXPECT_EQ(zeta.status, VerificationStatus::verified);
  EXPECT_EQ(zeta.checked, r.checked);
}

TEST(IdentitySuite, Ranges) {
  const VerificationReport r50 = verify_identity_suite({.m_max = 50});
  EXPECT_EQ(r50.status, VerificationStatus::verified);
  EXPECT_EQ(r50.checked, 49U);

  const VerificationReport r200 = verify_identity_suite({.m_max = 200});
  EXPECT_EQ(r200.status, VerificationStatus::verified) << canonical(r200);

  const VerificationReport r1 = verify_identity_suite({.m_max = 1});
  EXPECT_EQ(r1.status, VerificationStatus::partial);
  EXPECT_EQ(r1.checked, 0U);
  EXPECT_TRUE(r1.counterexamples.empty());

  EXPECT_THROW(verify_identity_suite({.m_max = 10, .algorithm = BernoulliAlgorithm::zeta}), std::invalid_argument);
  EXPECT_GE(identity_names().size(), 15U);
  EXPECT_TRUE(check_identities_at(12).empty());
}

TEST(Determinism, ByteIdenticalReports) {
  for (Claim c : {Claim::gcd_power_of_two, Claim::numerator_coprimality, Claim::identity_suite}) {
    const ScanOptions o{.m_max = 80, .chunk = 13};
    EXPECT_EQ(canonical(run_verification(c, o)), canonical(run_verification(c, o))) << claim_name(c);
  }
}

TEST(Parallel, WorkerCountIrrelevant) {
  for (Claim c : {Claim::gcd_power_of_two, Claim::numerator_coprimality, Claim::identity_suite}) {
    const std::string one = canonical(run_verification(c, {.m_max = 120, .workers = 1}));
    const std::string four = canonical(run_verification(c, {.m_max = 120, .workers = 4, .chunk = 7}));
    // Chunk size is not part of the report either.
    EXPECT_EQ(one, four) << claim_name(c);
  }
}

TEST(Checkpoint, ResumeMatchesUninterrupted) {
  const auto path = scratch("resume.json");
  const ScanOptions straight{.m_max = 150, .chunk = 20};
  const std::string expected = canonical(verify_identity_suite(straight));

  ScanOptions step = straight;
  step.checkpoint = path;
  step.stop_after_chunks = 2;
  const VerificationReport first = verify_identity_suite(step);
  EXPECT_EQ(first.status, VerificationStatus::partial);
  EXPECT_EQ(first.checkpoint_cursor, 42U);
  EXPECT_TRUE(std::filesystem::exists(path));

  const VerificationReport second = verify_identity_suite(step);
  EXPECT_EQ(second.status, VerificationStatus::partial);
  EXPECT_EQ(second.checkpoint_cursor, 82U);

  step.stop_after_chunks.reset();
  const VerificationReport done = verify_identity_suite(step);
  EXPECT_EQ(canonical(done), expected);

  // A finished checkpoint replays without further work.
  EXPECT_EQ(canonical(verify_identity_suite(step)), expected);
}

TEST(Checkpoint, CarriesCounterexamples) {
  const auto path = scratch("cex.json");
  ScanOptions o{.m_max = 2678, .chunk = 50, .checkpoint = path, .stop_after_chunks = 53};
  const VerificationReport partial = verify_gcd_power_of_two(o);
  EXPECT_EQ(partial.status, VerificationStatus::partial);
  EXPECT_EQ(partial.checkpoint_cursor, 2652U);
  o.stop_after_chunks.reset();
  const VerificationReport done = verify_gcd_power_of_two(o);
  ASSERT_EQ(done.counterexamples.size(), 1U);
  EXPECT_EQ(done.status, VerificationStatus::counterexample);
}

TEST(Checkpoint, RejectsForeignFile) {
  const auto path = scratch("foreign.json");
  verify_gcd_power_of_two({.m_max = 40, .checkpoint = path});
  EXPECT_THROW(verify_numerator_coprimality({.m_max = 40, .checkpoint = path}), std::invalid_argument);
  EXPECT_THROW(verify_gcd_power_of_two({.m_max = 60, .checkpoint = path}), std::invalid_argument);
}

TEST(Counterexample, ReverifiesInIsolation) {
  const VerificationReport r = verify_gcd_power_of_two({.m_max = 2678});
  ASSERT_EQ(r.status, VerificationStatus::counterexample);
  ASSERT_EQ(r.counterexamples.size(), 1U);
  const Counterexample& c = r.counterexamples[0];
  EXPECT_EQ(c.m, 2678U);
  EXPECT_EQ(c.witness.at("odd_part"), "34511");
  EXPECT_EQ(c.witness.at("nu2"), std::to_string(2 * 2678 + 1));
  EXPECT_EQ(parse_integer(c.witness.at("gcd")), pow2(2 * 2678 + 1) * 34511);

  const auto again = check_gcd_power_of_two_at(2678);
  ASSERT_TRUE(again);
  EXPECT_EQ(*again, c);
  const auto zeta = check_gcd_power_of_two_at(2678, BernoulliAlgorithm::zeta);
  ASSERT_TRUE(zeta);
  EXPECT_EQ(*zeta, c);
}

TEST(Names, RoundTrip) {
  for (Claim c : {Claim::gcd_power_of_two, Claim::numerator_coprimality, Claim::identity_suite}) {
    EXPECT_EQ(parse_claim(claim_name(c)), c);
  }
  for (auto s : {VerificationStatus::verified, VerificationStatus::counterexample, VerificationStatus::partial}) {
    EXPECT_EQ(parse_status(status_name(s)), s);
  }
  EXPECT_THROW(parse_claim("riemann"), std::invalid_argument);
}
