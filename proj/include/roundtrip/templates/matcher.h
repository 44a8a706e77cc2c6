//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_MATCHER_H_
#define ROUNDTRIP_TEMPLATES_MATCHER_H_

#include <cstddef>
#include <vector>

#include "roundtrip/chem/molecule.h"
#include "roundtrip/templates/pattern.h"

namespace roundtrip {

// embedding[i] is the host atom matched by pattern atom i.
using Embedding = std::vector<int>;

// All injective maps from pattern atoms to host atoms that preserve atom
// constraints and map every pattern bond onto a host bond of the same order
// (non-induced: extra host bonds are allowed). Results are ordered
// lexicographically by the canonical ranks of the images, so the first
// embedding does not depend on the host's atom numbering. At most `limit`
// embeddings are returned.
std::vector<Embedding> find_embeddings(const Pattern &pattern,
                                       const Molecule &host,
                                       std::size_t limit = 100000);

bool has_embedding(const Pattern &pattern, const Molecule &host);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_MATCHER_H_
