#pragma once

// JSON forms of the public value types. Integers are decimal strings and
// rationals are {"num": "...", "den": "..."} everywhere.

#include "charlat/bernoulli.hpp"
#include "charlat/bundle.hpp"
#include "charlat/genus.hpp"
#include "charlat/lattice.hpp"
#include "charlat/plumbing.hpp"
#include "charlat/verify.hpp"

#include <nlohmann/json.hpp>

namespace charlat {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const BezoutPair& b);
Json to_json(const BernoulliRecord& r);
Json to_json(const GenusCoefficients& g);
Json to_json(const InvariantVector& v);
Json to_json(const LatticeBasis& b);
Json to_json(const KernelStructure& k);
Json to_json(const DivisibilityReport& r);
Json to_json(const KappaExpression& e);
Json to_json(const Counterexample& c);

/// wall_time_seconds is omitted when include_wall_time is false, which makes
/// two runs with identical parameters byte-identical.
Json to_json(const VerificationReport& r, bool include_wall_time = true);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Counterexample counterexample_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

}  // namespace charlat
