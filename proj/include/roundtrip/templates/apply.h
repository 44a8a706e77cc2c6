//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_APPLY_H_
#define ROUNDTRIP_TEMPLATES_APPLY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "roundtrip/chem/molecule.h"
#include "roundtrip/templates/template.h"

namespace roundtrip {

// Applies the rule backwards at every embedding of its product pattern.
// Each outcome is a reactant set sorted by canonical SMILES; outcomes are
// distinct, sorted by their joined SMILES, and never contain `product`.
std::vector<std::vector<Molecule>>
apply_retro(const ReactionTemplate &t, const Molecule &product,
            std::size_t max_embeddings = 1000);

// Applies the rule forwards. The reactant count must equal the number of
// reactant patterns. Assignments of patterns to reactants and embeddings are
// tried in canonical order; the first one that rewrites cleanly wins.
std::optional<Molecule> apply_forward(const ReactionTemplate &t,
                                      const std::vector<Molecule> &reactants,
                                      std::size_t max_attempts = 10000);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_APPLY_H_
