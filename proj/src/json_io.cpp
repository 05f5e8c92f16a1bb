#include "relsimp/json_io.hpp"

namespace relsimp {

using nlohmann::json;

json interpretation_json(const Universe& u, Mask m) {
  return json(u.sorted_names_of(m));
}

json interpretations_json(const Universe& u, const std::vector<Mask>& sets) {
  json out = json::array();
  for (Mask m : sets) out.push_back(interpretation_json(u, m));
  return out;
}

json se_pair_json(const Universe& u, SEPair pair) {
  return json{{"here", interpretation_json(u, pair.here)},
              {"there", interpretation_json(u, pair.there)}};
}

json se_model_set_json(const SEModelSet& s) {
  json out;
  out["alphabet"] = interpretation_json(*s.universe, s.alphabet);
  out["relativizer"] =
      s.relativizer ? interpretation_json(*s.universe, *s.relativizer) : json(nullptr);
  json pairs = json::array();
  for (SEPair pr : s.pairs) pairs.push_back(se_pair_json(*s.universe, pr));
  out["pairs"] = pairs;
  return out;
}

json simplifiability_json(const Universe& u, const SimplifiabilityReport& report) {
  auto condition = [&](const DeltaCondition& c) {
    return json{{"holds", c.holds},
                {"witness", c.witness ? se_pair_json(u, *c.witness) : json(nullptr)}};
  };
  json out;
  out["delta"] = json{{"s1", condition(report.delta.s1)},
                      {"s2", condition(report.delta.s2)},
                      {"s3", condition(report.delta.s3)}};
  json omega;
  omega["satisfied"] = report.omega.satisfied;
  omega["witnessY"] = report.omega.witness_y
                          ? interpretation_json(u, *report.omega.witness_y)
                          : json(nullptr);
  if (report.omega.witness_family) {
    json family = json::array();
    for (const auto& entry : report.omega.witness_family->distinct_sets()) {
      family.push_back(interpretations_json(u, entry));
    }
    omega["family"] = family;
  } else {
    omega["family"] = json(nullptr);
  }
  out["omega"] = omega;
  out["simplifiable"] = report.simplifiable;
  return out;
}

json verification_json(const VerificationReport& report) {
  json out;
  out["semanticPass"] = report.semantic_pass;
  out["operationalPass"] = report.operational_pass;
  out["contextsChecked"] = report.contexts_checked;
  if (report.counterexample) {
    out["counterexample"] = json{{"context", format_program(report.counterexample->context)},
                                 {"asP", report.counterexample->as_p},
                                 {"asQ", report.counterexample->as_q}};
  } else {
    out["counterexample"] = json(nullptr);
  }
  return out;
}

}  // namespace relsimp
