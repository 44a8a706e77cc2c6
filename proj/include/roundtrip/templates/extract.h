//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_EXTRACT_H_
#define ROUNDTRIP_TEMPLATES_EXTRACT_H_

#include <vector>

#include "roundtrip/reaction/dataset.h"
#include "roundtrip/reaction/reaction.h"
#include "roundtrip/templates/template.h"

namespace roundtrip {

// Product atoms whose element, charge, hydrogen count, aromaticity or bonded
// neighborhood differs from their mapped reactant atom, plus every unmapped
// product atom. Sorted ascending. Throws TemplateError when the reaction has
// no atom map.
std::vector<int> detect_reaction_center(const Reaction &r);

// Template whose scope is the reaction center plus all atoms within `radius`
// bonds of it on either side, together with every unmapped atom of the
// reactants that contribute to the product. Reactants contributing no atoms
// are left out. The result is canonicalized with support = r.count.
// Throws TemplateError for unmapped reactions or an empty center.
ReactionTemplate extract_template(const Reaction &r, int radius);

struct ExtractStats {
  int reactions = 0;
  int unmapped = 0;
  // Mapped but not extractable, e.g. no reaction center.
  int failed = 0;
  int extracted = 0;
};

struct TemplateSet {
  std::vector<RetroTemplate> retro;
  std::vector<ForwardTemplate> forward;
  ExtractStats stats;
};

// Isomorphic templates are merged with summed support. Ids follow the order
// support descending, then key.
TemplateSet extract_templates(const ReactionDataset &ds, int radius = 1);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_EXTRACT_H_
