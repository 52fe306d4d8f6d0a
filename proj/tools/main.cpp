// charlat: command-line front end for the characteristic-number library.
//
// Every subcommand prints JSON by default. Exit status: 0 on success (and for
// verified or partial scans), 2 when a scan reports a counterexample, 1 on any
// error.

#include "charlat/bernoulli.hpp"
#include "charlat/bundle.hpp"
#include "charlat/genus.hpp"
#include "charlat/lattice.hpp"
#include "charlat/plumbing.hpp"
#include "charlat/serialize.hpp"
#include "charlat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace charlat;

namespace {

OrdParameter ord_from(unsigned long m, const std::string& ord) { return make_ord(m, parse_integer(ord)); }

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_bernoulli(unsigned long n, bool range, const std::string& format) {
  const unsigned long first = range ? 1 : n;
  default_engine().reserve(n);
  if (format == "csv") {
    std::cout << "n,abs_num,abs_den,num4,j\n";
    for (unsigned long i = first; i <= n; ++i) {
      const BernoulliRecord r = bernoulli_record(i);
      std::cout << i << ',' << r.abs_value.get_num() << ',' << r.abs_value.get_den() << ',' << r.num4 << ','
                << r.j << '\n';
    }
  } else if (format == "text") {
    for (unsigned long i = first; i <= n; ++i) {
      const BernoulliRecord r = bernoulli_record(i);
      std::cout << "|B_" << 2 * i << "| = " << r.abs_value << "   |B_" << 2 * i << "|/" << 4 * i << " = " << r.num4
                << '/' << r.j << '\n';
    }
  } else {
    if (!range) {
      print(to_json(bernoulli_record(n)));
    } else {
      Json out = Json::array();
      for (unsigned long i = first; i <= n; ++i) out.push_back(to_json(bernoulli_record(i)));
      print(out);
    }
  }
  return 0;
}

int cmd_coeffs(const std::string& genus, unsigned long m) {
  if (genus == "S") {
    print(to_json(stolz_class_coeffs(m, canonical_bezout(m))));
  } else {
    print(to_json(genus_coeffs(parse_genus(genus), m)));
  }
  return 0;
}

int cmd_plumbing(unsigned long m, const std::string& ord) {
  const OrdParameter o = ord_from(m, ord);
  Json out{{"m", std::to_string(m)}, {"ord", to_json(o.value)}, {"sigma_m", to_json(sigma(m))}};
  out["bp_order"] = to_json(bp_order(m));
  out["pk2_Q"] = m % 2 == 0 ? to_json(pk2_of_Q(m / 2)) : Json(nullptr);
  out["s_Q"] = m >= 2 ? to_json(s_of_Q(m)) : Json(nullptr);
  out["bezout"] = to_json(canonical_bezout(m));
  out["kernel"] = to_json(kernel_structure(o));
  print(out);
  return 0;
}

int cmd_lattice(unsigned long m, const std::string& ord, const std::string& variant, const std::string& format) {
  const LatticeBasis basis = generator_invariants(ord_from(m, ord), parse_variant(variant));
  if (format == "csv") {
    std::cout << "label,sigma,ahat,p_top,p_half_sq\n";
    for (const auto& g : basis.generators) {
      const auto& v = g.invariants;
      std::cout << '"' << g.label << "\"," << v.sigma << ',' << v.ahat << ',' << v.p_top << ',' << v.p_half_sq << '\n';
    }
  } else {
    print(to_json(basis));
  }
  return 0;
}

int cmd_minimal(unsigned long m, const std::string& ord) {
  const OrdParameter o = ord_from(m, ord);
  const MinimalSignature sig = minimal_signature(o);
  Json out{{"m", std::to_string(m)}, {"ord", to_json(o.value)}, {"minimal_signature", to_json(sig.value)}};
  out["exponent"] = sig.exponent ? Json(std::to_string(*sig.exponent)) : Json(nullptr);
  out["minimal_ahat"] = m >= 2 ? to_json(minimal_ahat(m)) : Json(nullptr);
  const bool bounded = m != 1 && m != 2 && m != 4;
  out["divisibility_bound"] = bounded ? to_json(signature_divisibility_bound(m)) : Json(nullptr);
  out["kernel"] = to_json(kernel_structure(o));
  print(out);
  return 0;
}

int cmd_bundle(unsigned long m, const std::string& ord) {
  print(to_json(bundle_report(ord_from(m, ord))));
  return 0;
}

int cmd_kappa(unsigned long m, const std::string& ord) {
  const OrdParameter o = ord_from(m, ord);
  Json basis = Json::array();
  for (const auto& e : kappa_basis(o)) basis.push_back(to_json(e));
  print(Json{{"m", std::to_string(m)},
             {"ord", to_json(o.value)},
             {"genus_threshold", kappa_genus_threshold(m)},
             {"basis", std::move(basis)}});
  return 0;
}

struct VerifyArgs {
  std::string claim;
  unsigned long max = 0;
  bool full = false;
  unsigned workers = 1;
  unsigned long chunk = 50;
  std::string checkpoint;
  unsigned long stop_after = 0;
  std::string algorithm;
  std::string format = "json";
  bool no_time = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Claim claim = parse_claim(a.claim);
  ScanOptions opt;
  opt.workers = a.workers;
  opt.chunk = a.chunk;
  if (a.full) {
    switch (claim) {
      case Claim::gcd_power_of_two: opt.m_max = 2678; break;
      case Claim::numerator_coprimality:
        opt.m_max = 42000;
        opt.algorithm = BernoulliAlgorithm::zeta;
        break;
      case Claim::identity_suite: opt.m_max = 200; break;
    }
  } else if (claim == Claim::identity_suite) {
    opt.m_max = 50;
  }
  if (a.max != 0) opt.m_max = a.max;
  if (!a.algorithm.empty()) {
    if (a.algorithm == "triangle") opt.algorithm = BernoulliAlgorithm::triangle;
    else if (a.algorithm == "zeta") opt.algorithm = BernoulliAlgorithm::zeta;
    else throw std::invalid_argument("unknown algorithm '" + a.algorithm + "'");
  }
  if (!a.checkpoint.empty()) opt.checkpoint = a.checkpoint;
  if (a.stop_after != 0) opt.stop_after_chunks = a.stop_after;

  const VerificationReport report = run_verification(claim, opt);
  if (a.format == "csv") {
    std::cout << "m,key,value\n";
    for (const auto& c : report.counterexamples) {
      for (const auto& [k, v] : c.witness) std::cout << c.m << ',' << k << ",\"" << v << "\"\n";
    }
  } else if (a.format == "text") {
    std::cout << report.claim << " on [" << report.range_min << ", " << report.range_max << "]: "
              << status_name(report.status) << " (" << report.checked << " indices, cursor "
              << report.checkpoint_cursor << ")\n";
    for (const auto& c : report.counterexamples) {
      std::cout << "  m=" << c.m;
      for (const auto& [k, v] : c.witness) std::cout << ' ' << k << '=' << v;
      std::cout << '\n';
    }
  } else {
    print(to_json(report, !a.no_time));
  }
  return report.status == VerificationStatus::counterexample ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic numbers of highly connected manifolds"};
  app.require_subcommand(1);
  int rc = 0;

  unsigned long n = 0, m = 0;
  bool range = false;
  std::string format = "json", genus, ord = "1", variant = "full";

  auto* bern = app.add_subcommand("bernoulli", "|B_2n| with num/denom of |B_2n|/4n");
  bern->add_option("--n", n, "index n >= 1")->required()->check(CLI::PositiveNumber);
  bern->add_flag("--range", range, "emit every index 1..n");
  bern->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  bern->callback([&] { rc = cmd_bernoulli(n, range, format); });

  auto* coeffs = app.add_subcommand("coeffs", "genus coefficients on (p_top, p_half^2)");
  coeffs->add_option("--genus", genus)->required()->check(CLI::IsMember({"L", "Ahat", "Ph", "AhatPh", "S"}));
  coeffs->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--format", format)->check(CLI::IsMember({"json"}));
  coeffs->callback([&] { rc = cmd_coeffs(genus, m); });

  auto* plumb = app.add_subcommand("plumbing", "invariants of the plumbings P and Q");
  plumb->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  plumb->add_option("--ord", ord, "order of [Sigma_Q] in coker J");
  plumb->add_option("--format", format)->check(CLI::IsMember({"json"}));
  plumb->callback([&] { rc = cmd_plumbing(m, ord); });

  auto* lat = app.add_subcommand("lattice", "generators of the characteristic-number lattice");
  lat->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  lat->add_option("--ord", ord);
  lat->add_option("--variant", variant)->check(CLI::IsMember({"full", "sig4"}));
  lat->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  lat->callback([&] { rc = cmd_lattice(m, ord, variant, format); });

  auto* minimal = app.add_subcommand("minimal", "minimal signature and A-hat");
  minimal->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  minimal->add_option("--ord", ord);
  minimal->callback([&] { rc = cmd_minimal(m, ord); });

  auto* bundle = app.add_subcommand("bundle", "divisibility of bundles over surfaces");
  bundle->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  bundle->add_option("--ord", ord);
  bundle->callback([&] { rc = cmd_bundle(m, ord); });

  auto* kappa = app.add_subcommand("kappa-basis", "integral basis of kappa expressions");
  kappa->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  kappa->add_option("--ord", ord);
  kappa->callback([&] { rc = cmd_kappa(m, ord); });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "range scan of a number-theoretic claim");
  verify->add_option("claim", va.claim)
      ->required()
      ->check(CLI::IsMember({"gcd-power-of-two", "numerator-coprimality", "identity-suite"}));
  verify->add_option("--max", va.max, "largest m to scan");
  verify->add_flag("--full", va.full, "full published range (2678 / 42000)");
  verify->add_option("--workers", va.workers)->check(CLI::PositiveNumber);
  verify->add_option("--chunk", va.chunk, "indices per checkpoint")->check(CLI::PositiveNumber);
  verify->add_option("--checkpoint", va.checkpoint, "resume from / write to this file");
  verify->add_option("--stop-after", va.stop_after, "stop after this many chunks");
  verify->add_option("--algorithm", va.algorithm)->check(CLI::IsMember({"triangle", "zeta"}));
  verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_flag("--no-time", va.no_time, "omit wall_time_seconds");
  verify->callback([&] { rc = cmd_verify(va); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
