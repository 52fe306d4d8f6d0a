#pragma once

// Range verification of the number-theoretic claims over m, with a worker
// pool, chunked progress, and resumable checkpoints.
//
// A scan walks m = range_min..m_max in chunks of `chunk` indices. Inside a
// chunk the indices are shared out to the workers; results are merged in
// index order, so neither the worker count nor an interruption changes the
// report. After every chunk the checkpoint file (if any) receives the cursor
// and the counterexamples found so far. Bernoulli values are never persisted.

#include "charlat/bernoulli.hpp"
#include "charlat/exact.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace charlat {

enum class Claim { gcd_power_of_two, numerator_coprimality, identity_suite };

Claim parse_claim(const std::string& name);
std::string claim_name(Claim claim);

enum class VerificationStatus { verified, counterexample, partial };
std::string status_name(VerificationStatus status);
VerificationStatus parse_status(const std::string& name);

struct Counterexample {
  unsigned long m = 0;
  std::map<std::string, std::string> witness;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string claim;
  unsigned long range_min = 2;
  unsigned long range_max = 0;
  std::string ord_policy;
  std::string algorithm;
  VerificationStatus status = VerificationStatus::partial;
  std::vector<Counterexample> counterexamples;
  unsigned long checked = 0;            // indices actually examined
  unsigned long checkpoint_cursor = 0;  // next m to examine; range_max + 1 when complete
  double wall_time_seconds = 0.0;
};

struct ScanOptions {
  unsigned long m_max = 300;
  unsigned workers = 1;
  unsigned long chunk = 50;
  std::optional<std::filesystem::path> checkpoint;
  /// Stop (status partial) after this many chunks in this invocation.
  std::optional<unsigned long> stop_after_chunks;
  BernoulliAlgorithm algorithm = BernoulliAlgorithm::triangle;
};

/// Every even m <= m_max: gcd(sigma_m, sigma_{m/2}^2) is a power of two.
/// Witness fields: gcd, odd_part, nu2.
VerificationReport verify_gcd_power_of_two(const ScanOptions& options);

/// Every even m <= m_max: gcd(num(|B_2m|/4m), num(|B_m|/2m)^2) = 1.
/// Witness fields: gcd, num_2m, num_m.
VerificationReport verify_numerator_coprimality(const ScanOptions& options);

/// Every cross-module identity at every m in [2, m_max] (ord = 1, canonical
/// Bezout pairs). Witness fields: identity, detail.
VerificationReport verify_identity_suite(const ScanOptions& options);

VerificationReport run_verification(Claim claim, const ScanOptions& options);

/// Names of the identities checked per index by the identity suite.
const std::vector<std::string>& identity_names();

/// Failures of every identity at index m (empty when all hold).
std::vector<Counterexample> check_identities_at(unsigned long m);

/// Single-index re-checks used to confirm reported counterexamples.
std::optional<Counterexample> check_gcd_power_of_two_at(unsigned long m,
                                                        BernoulliAlgorithm algorithm = BernoulliAlgorithm::triangle);
std::optional<Counterexample> check_numerator_coprimality_at(
    unsigned long m, BernoulliAlgorithm algorithm = BernoulliAlgorithm::triangle);

}  // namespace charlat
