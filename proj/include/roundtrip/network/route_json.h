//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_NETWORK_ROUTE_JSON_H_
#define ROUNDTRIP_NETWORK_ROUTE_JSON_H_

#include <json.hpp>

#include "roundtrip/network/route.h"

namespace roundtrip {

// {target, steps: [{product, reactants}], leaves, depth, confidence?}
nlohmann::ordered_json route_to_json(const SyntheticRoute &route);
// Rebuilds through make_route; throws on inconsistent records.
SyntheticRoute route_from_json(const nlohmann::json &j);

}  // namespace roundtrip

#endif  // ROUNDTRIP_NETWORK_ROUTE_JSON_H_
