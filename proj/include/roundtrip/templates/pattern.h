//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_PATTERN_H_
#define ROUNDTRIP_TEMPLATES_PATTERN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roundtrip/chem/molecule.h"

namespace roundtrip {

struct PatternAtom {
  int element = 6;
  bool aromatic = false;
  int charge = 0;
  // Constrained only for reaction-center and unlabeled atoms.
  std::optional<int> hydrogens;
  // Correspondence label shared with the other side of a template; 0 for
  // atoms that exist on one side only (leaving groups, unmapped atoms).
  int label = 0;

  bool operator==(const PatternAtom &) const = default;
};

struct PatternBond {
  int begin;
  int end;
  BondOrder order;

  bool operator==(const PatternBond &) const = default;
};

// Attributed subgraph pattern. It need not be connected.
struct Pattern {
  std::vector<PatternAtom> atoms;
  std::vector<PatternBond> bonds;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
  bool operator==(const Pattern &) const = default;
};

bool atom_matches(const PatternAtom &pattern, const Atom &atom);

// Pattern text: every atom is bracketed as [C;H1;+0:3] (H part omitted when
// unconstrained, label omitted when 0) and every bond symbol is explicit.
// Disconnected parts of one pattern are grouped as "(A.B)".
std::string write_pattern(const Pattern &pattern);
std::string write_patterns(const std::vector<Pattern> &patterns);

// Reads a '.'-separated list of possibly grouped patterns.
// Throws ParseError on malformed input.
std::vector<Pattern> parse_patterns(std::string_view text);
Pattern parse_pattern(std::string_view text);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_PATTERN_H_
