//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_REACTION_REACTION_H_
#define ROUNDTRIP_REACTION_REACTION_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "roundtrip/chem/molecule.h"

namespace roundtrip {

struct AtomRef {
  int molecule;
  int atom;

  bool operator==(const AtomRef &) const = default;
};

// Product atom i came from reactant atom (*atom_map)[i], when mapped.
using AtomMap = std::vector<std::optional<AtomRef>>;

// Single-product reaction. Reactants are kept sorted by canonical SMILES so
// that the reactant list doubles as a canonical multiset.
struct Reaction {
  std::vector<Molecule> reactants;
  Molecule product;
  std::optional<AtomMap> atom_map;
  std::string source_id;
  // Number of input records merged into this one by deduplication.
  int count = 1;

  std::vector<std::string> reactant_smiles() const;
  // "r1.r2>>p" on canonical SMILES, without atom maps.
  std::string canonical_key() const;
  // Reaction SMILES with atom maps; empty when unmapped.
  std::string mapped_smiles() const;
};

class ReactionParseError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parses "reactants>reagents>product". Reagents are discarded. When several
// products are listed the largest by heavy-atom count is kept (ties: smallest
// canonical SMILES). The atom map is kept when at least one product atom
// shares a map number with a reactant atom and map numbers are unique on each
// side. Anything after the first whitespace (CXSMILES extensions, comments)
// is ignored. Throws ParseError for malformed SMILES and ReactionParseError
// for structural problems.
Reaction parse_reaction_smiles(std::string_view line,
                               std::string source_id = {});

// Rebuilds atom_map from the atom-map numbers on the molecules; nullopt when
// no usable mapping exists.
std::optional<AtomMap> derive_atom_map(const std::vector<Molecule> &reactants,
                                       const Molecule &product);

}  // namespace roundtrip

#endif  // ROUNDTRIP_REACTION_REACTION_H_
