#include "ffam/analysis/report.hpp"

namespace ffam {

nlohmann::json to_json(const Report& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"claim", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"lhs", c.lhs},
                      {"rhs", c.rhs}});
  return {{"suite", r.suite}, {"all_pass", r.all_pass()}, {"count", r.claims.size()}, {"claims", claims}};
}

nlohmann::json to_json(const DimensionReport& d) {
  return {{"label", d.label}, {"geometric", d.geometric}, {"temporal", d.temporal}, {"dimension", d.dimension},
          {"provenance", d.provenance}};
}

nlohmann::json to_json(const ComplexityProfile& c) {
  auto pair = [](int p, int d) { return nlohmann::json{{"predicted", p}, {"computed", d}}; };
  return {{"N", c.N},
          {"phi", c.phi},
          {"cos_2pi_N", pair(c.cos_predicted, c.cos_degree)},
          {"sin_2pi_N", pair(c.sin_predicted, c.sin_degree)},
          {"tan_2pi_N", pair(c.tan2_predicted, c.tan2_degree)},
          {"tan_pi_N", pair(c.tan_predicted, c.tan_degree)},
          {"consistent", c.consistent()}};
}

nlohmann::json to_json(const TemporalEstimate& t) { return {{"ratios", t.ratios}, {"estimate", t.estimate}}; }

}  // namespace ffam
