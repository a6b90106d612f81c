#include "dynalg/json_io.hpp"

namespace dynalg {

Json to_json(const Scalar& s) { return s.to_string(); }
Json to_json(const PointP1& p) { return p.to_string(); }
Json to_json(const RationalFunction& r) { return r.to_string(); }

Json to_json(const FixedPointRecord& r) {
  return Json{{"point", to_json(r.point)},
              {"multiplier", to_json(r.multiplier)},
              {"repelling", r.repelling},
              {"local_notes", r.local_notes}};
}

Json to_json(const FixedPointSet& s) {
  Json recs = Json::array();
  for (const auto& r : s.records) recs.push_back(to_json(r));
  Json unresolved = Json::array();
  for (const auto& u : s.unresolved) unresolved.push_back(u.to_string());
  return Json{{"fixed_points", recs}, {"unresolved", unresolved}};
}

Json to_json(const TruncatedPowerSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coefficients()) c.push_back(to_json(x));
  return Json{{"base_point", to_json(s.base_point())}, {"order", s.order()}, {"coefficients", c}};
}

Json to_json(const BoettcherSeries& b) {
  Json c = Json::array();
  for (const auto& x : b.a) c.push_back(to_json(x));
  return Json{{"leading_index", -1}, {"order", b.order()}, {"map_degree", b.map_degree}, {"coefficients", c}};
}

Json to_json(const BivariatePolynomial& f) {
  Json mono = Json::array();
  std::vector<std::pair<BivariatePolynomial::Key, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  for (const auto& [k, c] : terms) mono.push_back(Json::array({k.first, k.second, to_json(c)}));
  return Json{{"monomials", mono}, {"text", f.to_string()}};
}

Json to_json(const DependencyCertificate& c) {
  Json j{{"verdict", c.verdict == Verdict::Relation ? "Relation" : "NoRelationUpTo"},
         {"bidegree", Json::array({c.m, c.n})},
         {"order", c.order},
         {"verification_order", c.verification_order},
         {"rank", c.rank},
         {"columns", c.columns},
         {"scale", to_json(c.scale)}};
  j["relation"] = c.relation ? to_json(*c.relation) : Json(nullptr);
  return j;
}

Json to_json(const Orbifold& o) {
  Json s = Json::array();
  for (const auto& [p, v] : o.support()) s.push_back(Json::array({to_json(p), v}));
  return Json{{"support", s}};
}

Json to_json(const MapCheck& m) {
  Json pts = Json::array();
  for (const auto& p : m.points) {
    pts.push_back(Json{{"where", p.where}, {"nu1", p.nu1}, {"local_degree", p.local_degree}, {"nu2", p.nu2}, {"ok", p.ok}});
  }
  return Json{{"holds", m.holds}, {"points", pts}, {"reason", m.reason}};
}

Json to_json(const LattesCheck& c) {
  return Json{{"holds", c.holds},
              {"minimal_holomorphic", c.minimal_holomorphic},
              {"euler_characteristic", to_json(c.chi)},
              {"chi_nonnegative", c.chi_nonnegative},
              {"check", to_json(c.map)}};
}

Json to_json(const LattesDetection& d) {
  Json pts = Json::array();
  for (const auto& p : d.candidate_points) pts.push_back(to_json(p));
  Json log = Json::array();
  for (const auto& e : d.log) {
    log.push_back(Json{{"candidate", e.candidate.to_string()}, {"accepted", e.accepted}, {"reason", e.reason}});
  }
  return Json{{"found", d.found ? to_json(*d.found) : Json(nullptr)},
              {"candidate_points", pts},
              {"candidate_log", log},
              {"warnings", d.warnings},
              {"special", d.special ? Json(*d.special) : Json(nullptr)},
              {"note", "bounded search; finding nothing is not a proof"}};
}

namespace {

Json pair_json(const std::optional<ExponentPair>& p) {
  return p ? Json::array({p->first, p->second}) : Json(nullptr);
}

}  // namespace

Json to_json(const CompatibilityReport& r) {
  return Json{{"multipliers", Json::array({to_json(r.lambda1), to_json(r.lambda2)})},
              {"degree_pair", pair_json(r.degree_pair)},
              {"multiplier_pair", pair_json(r.multiplier_pair)},
              {"independent", r.independent},
              {"summary", r.summary}};
}

Json to_json(const TheoremReport& r) {
  return Json{{"conditions", r.conditions}, {"details", r.details}, {"all", r.all()}};
}

Json to_json(const TransportReport& r) {
  return Json{{"holds", r.holds},
              {"multiplier_relation", r.multiplier_relation},
              {"lambda_a", to_json(r.lambda_a)},
              {"lambda_b", to_json(r.lambda_b)},
              {"scale", to_json(r.scale)},
              {"local_degree", r.local_degree},
              {"order", r.order},
              {"transported", to_json(r.lhs)},
              {"substituted", to_json(r.rhs)}};
}

Json to_json(const BoettcherTransportReport& r) {
  return Json{{"holds", r.holds},
              {"leading_a", to_json(r.leading_a)},
              {"leading_b", to_json(r.leading_b)},
              {"terms", r.terms}};
}

Json error_json(const std::exception& e) {
  Json err{{"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["position"] = pe->position();
    err["expected"] = pe->expected();
  }
  if (const auto* de = dynamic_cast<const Error*>(&e)) err["code"] = std::string(error_name(de->code()));
  else err["code"] = "InternalError";
  return Json{{"error", err}};
}

}  // namespace dynalg
