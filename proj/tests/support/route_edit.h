//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TESTS_SUPPORT_ROUTE_EDIT_H_
#define ROUNDTRIP_TESTS_SUPPORT_ROUTE_EDIT_H_

#include <string>

#include "roundtrip/network/route.h"
#include "support/synth.h"

namespace roundtrip::testing {

SyntheticRoute reference_route(const GeneratedRoute &g);

// Replaces intermediate `which` by an edited copy that enters the route as a
// starting material; the steps that made it are dropped.
SyntheticRoute corrupt(const SyntheticRoute &route, const std::string &which,
                       const std::string &edited);

}  // namespace roundtrip::testing

#endif  // ROUNDTRIP_TESTS_SUPPORT_ROUTE_EDIT_H_
