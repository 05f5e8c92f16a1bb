#pragma once

#include <json.hpp>

#include "relsimp/verify.hpp"

namespace relsimp {

nlohmann::json interpretation_json(const Universe& u, Mask m);
nlohmann::json interpretations_json(const Universe& u, const std::vector<Mask>& sets);
nlohmann::json se_pair_json(const Universe& u, SEPair pair);

// {"alphabet":[...], "relativizer":[...]|null, "pairs":[{"here":[...],"there":[...]}]}
nlohmann::json se_model_set_json(const SEModelSet& s);

// {"delta":{"s1":{holds,witness},...}, "omega":{satisfied,witnessY,family}, "simplifiable":bool}
nlohmann::json simplifiability_json(const Universe& u, const SimplifiabilityReport& report);

nlohmann::json verification_json(const VerificationReport& report);

}  // namespace relsimp
