#include "charlat/bernoulli.hpp"

#include <algorithm>
#include <stdexcept>

namespace charlat {

namespace {

constexpr unsigned long kMinTableGrowth = 64;

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Primes p with (p - 1) | 2n, ascending.
std::vector<unsigned long> vsc_primes(unsigned long n) {
  std::vector<unsigned long> primes;
  for (unsigned long d : divisors(2 * n)) {
    if (is_prime(d + 1)) primes.push_back(d + 1);
  }
  return primes;
}

}  // namespace

TangentStream::TangentStream(unsigned long limit) : limit_(limit) {
  if (limit_ == 0) return;
  row_.resize(limit_);
  row_[0] = 1;
  for (unsigned long k = 1; k < limit_; ++k) row_[k] = row_[k - 1] * k;
}

std::optional<Integer> TangentStream::next() {
  if (produced_ >= limit_) return std::nullopt;
  const unsigned long k = ++produced_;  // 1-based index of the value being finalized
  if (k >= 2) {
    // T_j <- (j-k) T_{j-1} + (j-k+2) T_j, j = k..limit, in place.
    for (unsigned long j = k; j <= limit_; ++j) {
      Integer& tj = row_[j - 1];
      mpz_mul_ui(tj.get_mpz_t(), tj.get_mpz_t(), j - k + 2);
      if (j > k) mpz_addmul_ui(tj.get_mpz_t(), row_[j - 2].get_mpz_t(), j - k);
    }
  }
  return row_[k - 1];
}

std::vector<Integer> tangent_numbers(unsigned long limit) {
  TangentStream stream(limit);
  std::vector<Integer> out;
  out.reserve(limit);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

Rational bernoulli_from_tangent(unsigned long n, const Integer& tangent) {
  if (n == 0) throw std::domain_error("bernoulli index must be positive");
  const Integer p = pow2(2 * n);
  return make_rational(Integer(2 * n) * tangent, p * (p - 1));
}

BernoulliRecord make_record(unsigned long n, const Rational& abs_value) {
  const Rational quarter = abs_value / Rational(Integer(4 * n));
  return {n, abs_value, quarter.get_num(), quarter.get_den()};
}

std::optional<BernoulliRecord> RecordStream::next() {
  auto t = tangents_.next();
  if (!t) return std::nullopt;
  const unsigned long n = tangents_.produced();
  return make_record(n, bernoulli_from_tangent(n, *t));
}

void BernoulliEngine::reserve(unsigned long limit) { table_for(limit); }

unsigned long BernoulliEngine::cached_limit() const {
  std::shared_lock lock(mutex_);
  return tangents_ ? tangents_->size() : 0;
}

std::shared_ptr<const std::vector<Integer>> BernoulliEngine::table_for(unsigned long n) {
  {
    std::shared_lock lock(mutex_);
    if (tangents_ && tangents_->size() >= n) return tangents_;
  }
  std::unique_lock lock(mutex_);
  if (tangents_ && tangents_->size() >= n) return tangents_;
  const unsigned long current = tangents_ ? tangents_->size() : 0;
  const unsigned long target = std::max({n, 2 * current, kMinTableGrowth});
  tangents_ = std::make_shared<const std::vector<Integer>>(tangent_numbers(target));
  return tangents_;
}

Integer BernoulliEngine::tangent(unsigned long n) {
  if (n == 0) throw std::domain_error("tangent index must be positive");
  return (*table_for(n))[n - 1];
}

BernoulliRecord BernoulliEngine::record(unsigned long n) {
  if (n == 0) throw std::domain_error("bernoulli index must be positive");
  {
    std::shared_lock lock(mutex_);
    if (auto it = records_.find(n); it != records_.end()) return it->second;
  }
  BernoulliRecord rec = make_record(n, bernoulli_from_tangent(n, tangent(n)));
  std::unique_lock lock(mutex_);
  return records_.try_emplace(n, std::move(rec)).first->second;
}

Rational BernoulliEngine::bernoulli_abs(unsigned long n) { return record(n).abs_value; }

BernoulliEngine& default_engine() {
  static BernoulliEngine engine;
  return engine;
}

Rational bernoulli_abs(unsigned long n) { return default_engine().bernoulli_abs(n); }

BernoulliRecord bernoulli_record(unsigned long n) { return default_engine().record(n); }

Integer vsc_denominator(unsigned long n) {
  if (n == 0) throw std::domain_error("vsc_denominator: index must be positive");
  Integer out = 1;
  for (unsigned long p : vsc_primes(n)) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, 1 + static_cast<unsigned long>(padic_valuation(Integer(n), p)));
    out *= power;
  }
  return out;
}

Integer bernoulli_denominator(unsigned long n) {
  if (n == 0) throw std::domain_error("bernoulli_denominator: index must be positive");
  Integer out = 1;
  for (unsigned long p : vsc_primes(n)) out *= p;
  return out;
}

Rational bernoulli_abs_with(BernoulliAlgorithm algorithm, unsigned long n) {
  return algorithm == BernoulliAlgorithm::zeta ? bernoulli_abs_zeta(n) : bernoulli_abs(n);
}

}  // namespace charlat
