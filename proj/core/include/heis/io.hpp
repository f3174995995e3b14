#pragma once

#include <nlohmann/json.hpp>

#include "heis/boundary.hpp"
#include "heis/equidistant.hpp"
#include "heis/heisenberg.hpp"

// JSON encodings:
//   HeisPoint          {"re": f, "im": f, "t": f}
//   Lift               [{"re","im"}, {"re","im"}, {"re","im"}]
//   CrossRatioTriple   {"X1": {re,im}, "X2": .., "X3": .., "residual1": f, "residual2": f}
//   Triple             {"p1": HeisPoint, "p2": .., "p3": ..}
//   SurfacePoint       {"a": f, "b": f, "c": f, "residual": f, "class": "generic|ccircle|rcircle"}
// Decoders throw nlohmann::json::exception on missing or mistyped fields.

namespace heis {

using Json = nlohmann::json;

void to_json(Json& j, const HeisPoint& p);
void from_json(const Json& j, HeisPoint& p);

void to_json(Json& j, const SurfacePoint& s);
/// Reads a, b, c; residual and class are derived and ignored on input.
void from_json(const Json& j, SurfacePoint& s);

void to_json(Json& j, const CrossRatioTriple& x);
void from_json(const Json& j, CrossRatioTriple& x);

Json triple_to_json(const Triple& P);
Triple triple_from_json(const Json& j);

Json lift_to_json(const Lift& l);
Lift lift_from_json(const Json& j);

}  // namespace heis
