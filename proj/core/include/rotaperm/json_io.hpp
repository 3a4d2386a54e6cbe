#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "rotaperm/certify.hpp"
#include "rotaperm/invert.hpp"
#include "rotaperm/lift.hpp"
#include "rotaperm/permcheck.hpp"
#include "rotaperm/search.hpp"

namespace rotaperm {

using Json = nlohmann::ordered_json;

Json triple_to_json(const Triple& p);

/// {"family":"00000011","m":3,"permutation":true,"points":512[,"witness":[[..],[..]]]}
Json to_json(const PermReport& r);

/// {"target":[..],"preimage":[..],"method":"closed-form|resolvent|table"}
Json to_json(const Inversion& inv);

/// {"m":3,"cubic":[gamma,beta,alpha,1],"terms":[{"e":12,"c":[x,y,z]}, ...]}
Json to_json(const ExtField& ext, const LiftedPoly& p);
/// Inverse of the above. The field must match "m" and "cubic" (kInvalidArgument).
LiftedPoly lifted_from_json(const ExtField& ext, const Json& j);

Json to_json(const ExtField& ext, const QmWitness& w);

/// [{"name":..,"status":"pass"|"fail","mandatory":..,"notes":..[,"diff":..]}, ...]
Json to_json(const std::vector<CertReport>& reports);

/// {"m":[..],"results":{"3":[..]},"intersection":[..],"candidates":[..]}
Json to_json(const SearchReport& r);

}  // namespace rotaperm
