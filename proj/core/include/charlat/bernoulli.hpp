#pragma once

// Bernoulli and tangent numbers at large index.
//
// Only absolute values |B_2n| are ever stored. The baseline algorithm is the
// tangent-number triangle (Brent-Harvey form of the Seidel boustrophedon),
// O(limit^2) small-multiplier big-integer updates for all of T_1..T_limit.
// bernoulli_abs_zeta() is an independent per-index route through zeta(2n)
// and the von Staudt-Clausen denominator.

#include "charlat/exact.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace charlat {

struct BernoulliRecord {
  unsigned long n = 0;
  Rational abs_value;  // |B_2n|
  Integer num4;        // num(|B_2n| / 4n)
  Integer j;           // denom(|B_2n| / 4n)
};

/// T_1..T_limit (index 0 holds T_1). Empty for limit == 0.
std::vector<Integer> tangent_numbers(unsigned long limit);

/// One triangle pass per call; yields T_1, T_2, ... T_limit in order.
/// The triangle needs its final width up front, hence the explicit limit.
class TangentStream {
 public:
  explicit TangentStream(unsigned long limit);

  std::optional<Integer> next();
  unsigned long produced() const { return produced_; }

 private:
  std::vector<Integer> row_;
  unsigned long limit_;
  unsigned long produced_ = 0;
};

/// |B_2n| = 2n T_n / (2^2n (2^2n - 1)).
Rational bernoulli_from_tangent(unsigned long n, const Integer& tangent);

BernoulliRecord make_record(unsigned long n, const Rational& abs_value);

/// Streams records n = 1..limit, reusing each triangle row once.
class RecordStream {
 public:
  explicit RecordStream(unsigned long limit) : tangents_(limit) {}

  std::optional<BernoulliRecord> next();

 private:
  TangentStream tangents_;
};

inline RecordStream record_range(unsigned long limit) { return RecordStream(limit); }

/// Memoized tangent table and record cache. Readers run concurrently; a
/// request beyond the cached range extends the table once under an exclusive
/// lock, so simultaneous first requests do the work a single time.
class BernoulliEngine {
 public:
  BernoulliEngine() = default;
  BernoulliEngine(const BernoulliEngine&) = delete;
  BernoulliEngine& operator=(const BernoulliEngine&) = delete;

  /// Ensures T_1..T_limit are cached.
  void reserve(unsigned long limit);
  unsigned long cached_limit() const;

  Integer tangent(unsigned long n);
  Rational bernoulli_abs(unsigned long n);
  BernoulliRecord record(unsigned long n);

 private:
  std::shared_ptr<const std::vector<Integer>> table_for(unsigned long n);

  mutable std::shared_mutex mutex_;
  std::shared_ptr<const std::vector<Integer>> tangents_;
  std::unordered_map<unsigned long, BernoulliRecord> records_;
};

/// Process-wide engine used by the free functions below.
BernoulliEngine& default_engine();

Rational bernoulli_abs(unsigned long n);
BernoulliRecord bernoulli_record(unsigned long n);

/// num(|B_2n| / 4n) and j_n, straight from the default engine.
inline Integer num4(unsigned long n) { return bernoulli_record(n).num4; }
inline Integer j_value(unsigned long n) { return bernoulli_record(n).j; }

/// prod_{p-1 | 2n} p^(1 + v_p(n)), i.e. denom(|B_2n| / n), computed from the
/// prime factorization alone.
Integer vsc_denominator(unsigned long n);

/// prod_{p-1 | 2n} p, the denominator of B_2n.
Integer bernoulli_denominator(unsigned long n);

/// |B_2n| = 2 (2n)! zeta(2n) / (2 pi)^2n, rounded against the known
/// denominator. Small indices (n < 16) are delegated to the triangle.
Rational bernoulli_abs_zeta(unsigned long n);

enum class BernoulliAlgorithm { triangle, zeta };

/// Single-index lookup through either route.
Rational bernoulli_abs_with(BernoulliAlgorithm algorithm, unsigned long n);

}  // namespace charlat
