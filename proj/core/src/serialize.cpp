#include "charlat/serialize.hpp"

namespace charlat {

Json to_json(const Integer& x) { return to_decimal(x); }

Json to_json(const Rational& x) {
  return Json{{"num", to_decimal(x.get_num())}, {"den", to_decimal(x.get_den())}};
}

Json to_json(const BezoutPair& b) {
  return Json{{"c", to_json(b.c)},
              {"d", to_json(b.d)},
              {"for_numerator", to_json(b.for_numerator)},
              {"for_denominator", to_json(b.for_denominator)}};
}

Json to_json(const BernoulliRecord& r) {
  return Json{{"n", std::to_string(r.n)},
              {"abs_num", to_json(Integer(r.abs_value.get_num()))},
              {"abs_den", to_json(Integer(r.abs_value.get_den()))},
              {"num4", to_json(r.num4)},
              {"j", to_json(r.j)}};
}

Json to_json(const GenusCoefficients& g) {
  return Json{{"m", std::to_string(g.degree_m)},
              {"coeff_p_top", to_json(g.coeff_p_top)},
              {"coeff_p_half_sq", to_json(g.coeff_p_half_sq)}};
}

Json to_json(const InvariantVector& v) {
  return Json{{"sigma", to_json(v.sigma)},
              {"ahat", to_json(v.ahat)},
              {"p_top", to_json(v.p_top)},
              {"p_half_sq", to_json(v.p_half_sq)}};
}

Json to_json(const LatticeBasis& b) {
  Json gens = Json::array();
  for (const auto& g : b.generators) {
    gens.push_back(Json{{"label", g.label}, {"invariants", to_json(g.invariants)}});
  }
  return Json{{"m", std::to_string(b.m)},
              {"ord", to_json(b.ord.value)},
              {"variant", variant_name(b.variant)},
              {"generators", std::move(gens)}};
}

Json to_json(const KernelStructure& k) {
  return Json{{"group", k.to_string()}, {"free_rank", k.free_rank}, {"torsion", k.torsion}};
}

Json to_json(const DivisibilityReport& r) {
  Json out{{"m", std::to_string(r.m)},
           {"ord", to_json(r.ord.value)},
           {"signature_divisor", to_json(r.signature_divisor)}};
  out["ahat_divisor"] = r.ahat_divisor ? to_json(*r.ahat_divisor) : Json(nullptr);
  out["non_admissible_divisor"] = r.non_admissible_divisor ? to_json(*r.non_admissible_divisor) : Json(nullptr);
  out["signature_4_realizable"] = signature_4_realizable(r.m);
  out["realizable_at_genus"] = r.realizable_at_genus;
  out["applies_to"] = "admissible bundles";
  return out;
}

Json to_json(const KappaExpression& e) {
  return Json{{"label", e.label},
              {"coeff_p_top", to_json(e.coeff_p_top)},
              {"coeff_p_half_sq", to_json(e.coeff_p_half_sq)}};
}

Json to_json(const Counterexample& c) {
  Json w = Json::object();
  for (const auto& [key, value] : c.witness) w[key] = value;
  return Json{{"m", std::to_string(c.m)}, {"witness", std::move(w)}};
}

Json to_json(const VerificationReport& r, bool include_wall_time) {
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(to_json(c));
  Json out{{"claim", r.claim},
           {"range", Json{{"min", std::to_string(r.range_min)}, {"max", std::to_string(r.range_max)}}},
           {"ord_policy", r.ord_policy},
           {"algorithm", r.algorithm},
           {"status", status_name(r.status)},
           {"checked", std::to_string(r.checked)},
           {"checkpoint_cursor", std::to_string(r.checkpoint_cursor)},
           {"counterexamples", std::move(cex)}};
  if (include_wall_time) out["wall_time_seconds"] = r.wall_time_seconds;
  return out;
}

Integer integer_from_json(const Json& j) { return parse_integer(j.get<std::string>()); }

Rational rational_from_json(const Json& j) {
  return make_rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

Counterexample counterexample_from_json(const Json& j) {
  Counterexample c;
  c.m = std::stoul(j.at("m").get<std::string>());
  for (const auto& [key, value] : j.at("witness").items()) c.witness[key] = value.get<std::string>();
  return c;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.range_min = std::stoul(j.at("range").at("min").get<std::string>());
  r.range_max = std::stoul(j.at("range").at("max").get<std::string>());
  r.ord_policy = j.at("ord_policy").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.checked = std::stoul(j.at("checked").get<std::string>());
  r.checkpoint_cursor = std::stoul(j.at("checkpoint_cursor").get<std::string>());
  for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(counterexample_from_json(c));
  if (j.contains("wall_time_seconds")) r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  return r;
}

}  // namespace charlat
