//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TESTS_SUPPORT_BRUTE_ROUTES_H_
#define ROUNDTRIP_TESTS_SUPPORT_BRUTE_ROUTES_H_

#include <random>
#include <set>
#include <vector>

#include "roundtrip/network/network.h"
#include "roundtrip/network/route.h"

namespace roundtrip::testing {

using StepSet = std::set<RouteStep>;

// Random network of small clusters so each target's closure stays small
// enough to enumerate every subset of its reactions. Molecule i is the
// alkane with i + 1 carbons; the result is deduplicated.
std::vector<Reaction> alkane_network(std::mt19937_64 &rng, int reactions);

// Every subset of the reactions reachable backwards from the target, kept
// when it forms a valid route. Throws when the closure exceeds 20 reactions.
std::set<StepSet> brute_force_routes(const ReactionNetwork &net, int target, int max_depth,
                                     const StockSet *stock);

}  // namespace roundtrip::testing

#endif  // ROUNDTRIP_TESTS_SUPPORT_BRUTE_ROUTES_H_
