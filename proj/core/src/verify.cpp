#include "charlat/verify.hpp"

#include "charlat/bundle.hpp"
#include "charlat/genus.hpp"
#include "charlat/lattice.hpp"
#include "charlat/plumbing.hpp"
#include "charlat/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace charlat {

Claim parse_claim(const std::string& name) {
  if (name == "gcd-power-of-two") return Claim::gcd_power_of_two;
  if (name == "numerator-coprimality") return Claim::numerator_coprimality;
  if (name == "identity-suite") return Claim::identity_suite;
  throw std::invalid_argument("unknown claim '" + name + "'");
}

std::string claim_name(Claim claim) {
  switch (claim) {
    case Claim::gcd_power_of_two: return "gcd-power-of-two";
    case Claim::numerator_coprimality: return "numerator-coprimality";
    case Claim::identity_suite: return "identity-suite";
  }
  return "?";
}

std::string status_name(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::verified: return "verified";
    case VerificationStatus::counterexample: return "counterexample";
    case VerificationStatus::partial: return "partial";
  }
  return "?";
}

VerificationStatus parse_status(const std::string& name) {
  if (name == "verified") return VerificationStatus::verified;
  if (name == "counterexample") return VerificationStatus::counterexample;
  if (name == "partial") return VerificationStatus::partial;
  throw std::invalid_argument("unknown status '" + name + "'");
}

namespace {

std::string algorithm_name(BernoulliAlgorithm a) { return a == BernoulliAlgorithm::zeta ? "zeta" : "triangle"; }

Integer num4_with(BernoulliAlgorithm algorithm, unsigned long n) {
  if (algorithm == BernoulliAlgorithm::triangle) return num4(n);
  return make_record(n, bernoulli_abs_zeta(n)).num4;
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// ---------------------------------------------------------------------------
// Scan driver

struct ScanPlan {
  Claim claim;
  std::string ord_policy;
  std::function<bool(unsigned long)> applies;
  std::function<std::vector<Counterexample>(unsigned long)> check;
  std::function<void()> prepare;
};

void write_checkpoint(const std::filesystem::path& path, const VerificationReport& report) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << to_json(report, false).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<VerificationReport> load_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  return report_from_json(Json::parse(in));
}

// Runs check(m) for every applicable m in [lo, hi] on `workers` threads and
// returns the failures in index order.
std::vector<Counterexample> run_chunk(const ScanPlan& plan, unsigned long lo, unsigned long hi, unsigned workers,
                                      unsigned long& examined) {
  std::vector<unsigned long> indices;
  for (unsigned long m = lo; m <= hi; ++m) {
    if (plan.applies(m)) indices.push_back(m);
  }
  std::vector<std::vector<Counterexample>> results(indices.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < indices.size(); i = next++) {
      try {
        results[i] = plan.check(indices[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = indices.size();
      }
    }
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(indices.size())));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  examined += indices.size();
  std::vector<Counterexample> out;
  for (auto& r : results) {
    for (auto& c : r) out.push_back(std::move(c));
  }
  return out;
}

VerificationReport run_scan(const ScanPlan& plan, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = claim_name(plan.claim);
  report.range_min = 2;
  report.range_max = options.m_max;
  report.ord_policy = plan.ord_policy;
  report.algorithm = algorithm_name(options.algorithm);
  report.checkpoint_cursor = report.range_min;

  if (options.checkpoint) {
    if (auto saved = load_checkpoint(*options.checkpoint)) {
      if (saved->claim != report.claim || saved->range_min != report.range_min ||
          saved->range_max != report.range_max || saved->algorithm != report.algorithm) {
        throw std::invalid_argument("checkpoint " + options.checkpoint->string() +
                                    " belongs to a different claim, range, or algorithm");
      }
      report.counterexamples = saved->counterexamples;
      report.checked = saved->checked;
      report.checkpoint_cursor = saved->checkpoint_cursor;
    }
  }

  if (report.checkpoint_cursor <= options.m_max) plan.prepare();

  const unsigned long chunk = std::max(1UL, options.chunk);
  unsigned long chunks_done = 0;
  while (report.checkpoint_cursor <= options.m_max) {
    if (options.stop_after_chunks && chunks_done >= *options.stop_after_chunks) break;
    const unsigned long lo = report.checkpoint_cursor;
    const unsigned long hi = std::min(options.m_max, lo + chunk - 1);
    auto found = run_chunk(plan, lo, hi, options.workers, report.checked);
    for (auto& c : found) report.counterexamples.push_back(std::move(c));
    report.checkpoint_cursor = hi + 1;
    ++chunks_done;
    if (options.checkpoint) write_checkpoint(*options.checkpoint, report);
  }

  const bool complete = report.checkpoint_cursor > options.m_max && report.checked > 0;
  if (!report.counterexamples.empty()) {
    report.status = VerificationStatus::counterexample;
  } else {
    report.status = complete ? VerificationStatus::verified : VerificationStatus::partial;
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (options.checkpoint) write_checkpoint(*options.checkpoint, report);
  return report;
}

bool is_even(unsigned long m) { return m % 2 == 0; }

// ---------------------------------------------------------------------------
// Identity suite

using IdentityCheck = std::function<std::optional<std::string>(unsigned long)>;

struct Identity {
  std::string name;
  unsigned long min_m;
  bool even_only;
  IdentityCheck check;  // nullopt when the identity holds
};

std::optional<std::string> expect(bool ok, const std::string& detail) {
  if (ok) return std::nullopt;
  return detail;
}

const std::vector<Identity>& identities() {
  static const std::vector<Identity> list = {
      {"vsc_denominator", 1, false,
       [](unsigned long m) {
         const Rational ratio = bernoulli_abs(m) / Rational(Integer(m));
         const Integer vsc = vsc_denominator(m);
         return expect(ratio.get_den() == vsc, "denom " + Integer(ratio.get_den()).get_str() + " vs " + vsc.get_str());
       }},
      {"j_valuation", 1, false,
       [](unsigned long m) {
         const long v = nu2(j_value(m));
         return expect(v == nu2(Integer(m)) + 3, "v2(j_m) = " + std::to_string(v));
       }},
      {"j_divides_j_2m", 1, false,
       [](unsigned long m) {
         return expect(mpz_divisible_p(j_value(2 * m).get_mpz_t(), j_value(m).get_mpz_t()) != 0, "j_m does not divide j_2m");
       }},
      {"tangent_even", 2, false,
       [](unsigned long m) { return expect(mpz_even_p(default_engine().tangent(m).get_mpz_t()) != 0, "T_m is odd"); }},
      {"s_closed_forms", 1, false,
       [](unsigned long m) {
         return expect(s_coeff(m) == s_coeff_via_sigma(m), s_coeff(m).get_str() + " vs " + s_coeff_via_sigma(m).get_str());
       }},
      {"stolz_no_p_top", 1, false,
       [](unsigned long m) {
         const GenusCoefficients s = stolz_class_coeffs(m, canonical_bezout(m));
         const bool ok = s.coeff_p_top == 0 && (m % 2 == 0 || s.coeff_p_half_sq == 0);
         return expect(ok, "S_m coefficients " + s.coeff_p_top.get_str() + ", " + s.coeff_p_half_sq.get_str());
       }},
      {"sigma_valuation", 1, false,
       [](unsigned long m) {
         const long v = nu2(sigma(m));
         return expect(v == static_cast<long>(2 * m + 1) + nu2(Integer(a_coeff(m))), "v2(sigma_m) = " + std::to_string(v));
       }},
      {"hirzebruch_consistency", 2, false,
       [](unsigned long m) -> std::optional<std::string> {
         const GenusCoefficients l = genus_coeffs(Genus::L, m);
         const GenusCoefficients a = genus_coeffs(Genus::Ahat, m);
         for (auto variant : {LatticeVariant::full_kernel, LatticeVariant::signature_in_4Z}) {
           for (const auto& g : generator_invariants(make_ord(m), variant).generators) {
             const InvariantVector& v = g.invariants;
             if (l.evaluate(v.p_top, v.p_half_sq) != Rational(v.sigma)) return "L mismatch on " + g.label;
             if (a.evaluate(v.p_top, v.p_half_sq) != Rational(v.ahat)) return "A-hat mismatch on " + g.label;
           }
         }
         return std::nullopt;
       }},
      {"minimal_signature_gcd", 2, false,
       [](unsigned long m) {
         const auto basis = generator_invariants(make_ord(m), LatticeVariant::full_kernel);
         Integer g = 0;
         for (const auto& gen : basis.generators) g = gcd_of(g, gen.invariants.sigma);
         const Integer expected = minimal_signature(make_ord(m)).value;
         return expect(g == expected, "gcd " + g.get_str() + " vs " + expected.get_str());
       }},
      {"minimal_ahat_gcd", 2, false,
       [](unsigned long m) {
         const auto basis = generator_invariants(make_ord(m), LatticeVariant::full_kernel);
         Integer g = 0;
         for (const auto& gen : basis.generators) g = gcd_of(g, gen.invariants.ahat);
         const Integer expected = minimal_ahat(m);
         return expect(g == expected, "gcd " + g.get_str() + " vs " + expected.get_str());
       }},
      {"kappa_duality", 2, false,
       [](unsigned long m) -> std::optional<std::string> {
         const OrdParameter ord = make_ord(m);
         const auto basis = generator_invariants(ord, LatticeVariant::signature_in_4Z);
         const auto matrix = pairing_matrix(kappa_basis_generator_order(ord), basis);
         if (matrix.size() != basis.generators.size()) return "rank mismatch";
         for (std::size_t i = 0; i < matrix.size(); ++i) {
           for (std::size_t j = 0; j < matrix[i].size(); ++j) {
             if (matrix[i][j] != (i == j ? 1 : 0)) {
               return "pairing(" + std::to_string(i) + "," + std::to_string(j) + ") = " + matrix[i][j].get_str();
             }
           }
         }
         return std::nullopt;
       }},
      {"signature_divisor_bounds", 2, false,
       [](unsigned long m) -> std::optional<std::string> {
         const Integer divisor = bundle_signature_divisor(make_ord(m));
         if (mpz_divisible_ui_p(divisor.get_mpz_t(), 4) == 0) return "divisor " + divisor.get_str() + " not divisible by 4";
         if (m != 2 && m != 4) {
           const Integer bound = signature_divisibility_bound(m);
           if (mpz_divisible_p(divisor.get_mpz_t(), bound.get_mpz_t()) == 0) {
             return "bound " + bound.get_str() + " does not divide " + divisor.get_str();
           }
         }
         return std::nullopt;
       }},
      {"s_of_Q_formulas", 2, true,
       [](unsigned long m) -> std::optional<std::string> {
         try {
           s_of_Q(m);
         } catch (const std::logic_error& e) {
           return std::string(e.what());
         }
         return std::nullopt;
       }},
      {"half_s_identity", 2, true,
       [](unsigned long m) {
         const BezoutPair b = canonical_bezout(m);
         const Rational lhs = s_coeff(m) / 2;
         const Rational rhs = Rational(sigma(m) * b.d) / Rational(2 * factorial(2 * m - 1)) -
                              Rational(sigma(m) * b.c) * shat(m) / 2;
         return expect(lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
       }},
      {"sigma_c_identity", 2, true,
       [](unsigned long m) {
         const BezoutPair b = canonical_bezout(m);
         const Integer lhs = sigma(m) * b.c;
         const Integer rhs = pow2(2 * m + 1) * (pow2(2 * m - 1) - 1) * (1 - j_value(m) * b.d);
         return expect(lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
       }},
      {"s_of_Q_congruence", 6, true,
       [](unsigned long m) {
         const unsigned long k = m / 2;
         const Integer jk = j_value(k);
         const Integer sk = sigma(k);
         const Integer lhs = jk * jk * s_of_Q(m) + sk * sk / 8;
         return expect(mpz_divisible_p(lhs.get_mpz_t(), bp_order(m).get_mpz_t()) != 0,
                       "j_k^2 s(Q) + sigma_k^2/8 not divisible by sigma_m/8");
       }},
      {"gcd_valuation", 2, true,
       [](unsigned long m) {
         const Integer sk = sigma(m / 2);
         const long v = nu2(gcd_of(sigma(m), sk * sk));
         return expect(v == static_cast<long>(m) + 1 + static_cast<long>(m), "v2 = " + std::to_string(v));
       }},
      {"ahat_in_L", 2, true,
       [](unsigned long m) {
         const P2kSolution solved = p2k_solve(m / 2);
         const AhatInL closed = ahat_via_tangent(m / 2);
         return expect(solved.ahat_per_L == closed.per_L && solved.ahat_per_pk2 == closed.per_pk2,
                       "A-hat_2k expansions differ");
       }},
      {"bezout_robustness", 2, true,
       [](unsigned long m) -> std::optional<std::string> {
         const BezoutPair b = canonical_bezout(m);
         const Integer base = s_of_Q(m, b);
         const Integer order = bp_order(m);
         for (long t : {-2L, -1L, 1L, 2L}) {
           const BezoutPair shifted = b.shifted(t);
           const Integer delta = s_of_Q(m, shifted) - base;
           if (mpz_divisible_p(delta.get_mpz_t(), order.get_mpz_t()) == 0) return "s(Q) shift not a multiple of bP order";
           for (auto variant : {LatticeVariant::full_kernel, LatticeVariant::signature_in_4Z}) {
             if (!lattice_span_equal(generator_invariants(make_ord(m), variant, b),
                                     generator_invariants(make_ord(m), variant, shifted))) {
               return "span differs for shift " + std::to_string(t);
             }
           }
         }
         return std::nullopt;
       }},
      {"almost_parallelizable_comparison", 10, true,
       [](unsigned long m) {
         const Integer minimal = minimal_signature(make_ord(m)).value;
         const Rational bound = make_rational(sigma(m), pow2(m - static_cast<unsigned long>(nu2(Integer(m))) - 8));
         return expect(Rational(minimal) < bound, minimal.get_str() + " >= " + bound.get_str());
       }},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& id : identities()) out.push_back(id.name);
    return out;
  }();
  return names;
}

std::vector<Counterexample> check_identities_at(unsigned long m) {
  std::vector<Counterexample> out;
  for (const auto& id : identities()) {
    if (m < id.min_m || (id.even_only && m % 2 == 1)) continue;
    std::optional<std::string> failure;
    try {
      failure = id.check(m);
    } catch (const std::logic_error& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) out.push_back({m, {{"identity", id.name}, {"detail", *failure}}});
  }
  return out;
}

std::optional<Counterexample> check_gcd_power_of_two_at(unsigned long m, BernoulliAlgorithm algorithm) {
  if (m < 2 || m % 2 == 1) throw std::domain_error("gcd check needs an even m >= 2");
  const Integer top = sigma_from_num4(m, num4_with(algorithm, m));
  const Integer half = sigma_from_num4(m / 2, num4_with(algorithm, m / 2));
  const Integer g = gcd_of(top, half * half);
  if (is_power_of_two(g)) return std::nullopt;
  return Counterexample{m, {{"gcd", g.get_str()}, {"odd_part", odd_part(g).get_str()}, {"nu2", std::to_string(nu2(g))}}};
}

std::optional<Counterexample> check_numerator_coprimality_at(unsigned long m, BernoulliAlgorithm algorithm) {
  if (m < 2 || m % 2 == 1) throw std::domain_error("coprimality check needs an even m >= 2");
  const Integer top = num4_with(algorithm, m);
  const Integer half = num4_with(algorithm, m / 2);
  const Integer g = gcd_of(top, half * half);
  if (g == 1) return std::nullopt;
  return Counterexample{m, {{"gcd", g.get_str()}, {"num_2m", top.get_str()}, {"num_m", half.get_str()}}};
}

VerificationReport verify_gcd_power_of_two(const ScanOptions& options) {
  const ScanPlan plan{
      Claim::gcd_power_of_two, "not applicable", is_even,
      [&](unsigned long m) {
        std::vector<Counterexample> out;
        if (auto c = check_gcd_power_of_two_at(m, options.algorithm)) out.push_back(std::move(*c));
        return out;
      },
      [&] {
        if (options.algorithm == BernoulliAlgorithm::triangle) default_engine().reserve(options.m_max);
      }};
  return run_scan(plan, options);
}

VerificationReport verify_numerator_coprimality(const ScanOptions& options) {
  const ScanPlan plan{
      Claim::numerator_coprimality, "not applicable", is_even,
      [&](unsigned long m) {
        std::vector<Counterexample> out;
        if (auto c = check_numerator_coprimality_at(m, options.algorithm)) out.push_back(std::move(*c));
        return out;
      },
      [&] {
        if (options.algorithm == BernoulliAlgorithm::triangle) default_engine().reserve(options.m_max);
      }};
  return run_scan(plan, options);
}

VerificationReport verify_identity_suite(const ScanOptions& options) {
  if (options.algorithm != BernoulliAlgorithm::triangle) {
    throw std::invalid_argument("the identity suite runs on the cached triangle only");
  }
  const ScanPlan plan{Claim::identity_suite, "ord=1 (conjectured), canonical Bezout pairs",
                      [](unsigned long) { return true; }, check_identities_at,
                      [&] { default_engine().reserve(2 * options.m_max); }};
  return run_scan(plan, options);
}

VerificationReport run_verification(Claim claim, const ScanOptions& options) {
  switch (claim) {
    case Claim::gcd_power_of_two: return verify_gcd_power_of_two(options);
    case Claim::numerator_coprimality: return verify_numerator_coprimality(options);
    case Claim::identity_suite: return verify_identity_suite(options);
  }
  throw std::invalid_argument("unknown claim");
}

}  // namespace charlat
