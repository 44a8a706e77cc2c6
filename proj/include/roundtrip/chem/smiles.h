//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CHEM_SMILES_H_
#define ROUNDTRIP_CHEM_SMILES_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "roundtrip/chem/molecule.h"

namespace roundtrip {

enum class ParseErrorKind {
  kEmptyInput,
  kUnclosedRingBond,
  kUnbalancedParenthesis,
  kUnknownElement,
  kBadChargeSyntax,
  kBadBracketAtom,
  kRingBondMismatch,
  kUnexpectedCharacter,
  kMultipleComponents,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError: public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, std::size_t position, std::string_view text);

  ParseErrorKind kind() const { return kind_; }
  // Character offset into the parsed text.
  std::size_t position() const { return position_; }

private:
  ParseErrorKind kind_;
  std::size_t position_;
};

// Parses a single-component SMILES string. Organic subset and bracket atoms,
// branches, ring closures (digits and %nn) and bond symbols are supported.
// Stereo markers and isotopes are accepted and dropped. Atom-map numbers in
// bracket atoms are kept on the atoms. Throws ParseError.
Molecule parse_smiles(std::string_view text);

// Same grammar, but '.'-separated components are returned individually.
std::vector<Molecule> parse_smiles_components(std::string_view text);

struct SmilesWriteOptions {
  bool atom_maps = false;
  // When false, atoms are visited in index order instead of canonical order.
  bool canonical_order = true;
};

// Canonical SMILES; identical for isomorphic graphs. Atom maps are ignored.
std::string canonical_smiles(const Molecule &mol);

// Serializes the molecule, optionally emitting atom maps.
std::string write_smiles(const Molecule &mol,
                         const SmilesWriteOptions &options = {});

}  // namespace roundtrip

#endif  // ROUNDTRIP_CHEM_SMILES_H_
