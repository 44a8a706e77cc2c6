//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CHEM_SMILES_SYNTAX_H_
#define ROUNDTRIP_CHEM_SMILES_SYNTAX_H_

// Shared SMILES-shaped syntax layer. The molecule parser and the reaction
// template pattern reader interpret atom tokens differently but share the
// branch, ring-closure and bond grammar, and the DFS writer.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roundtrip::internal {

struct RawAtom {
  // For bracket atoms, the text between the brackets.
  std::string_view text;
  std::size_t position;
  bool bracket;
  int component;
  // Component-level grouping "(A.B).C": atoms of A and B share a fragment.
  int fragment;
};

struct RawBond {
  int a;
  int b;
  // 0 when no bond symbol was written; '/' and '\' are reported as '-'.
  char symbol;
  std::size_t position;
};

struct RawGraph {
  std::vector<RawAtom> atoms;
  std::vector<RawBond> bonds;
  int num_components = 0;
  int num_fragments = 0;
  // Offset of the first top-level '.', or npos.
  std::size_t first_dot = std::string_view::npos;
};

// Throws ParseError. Component grouping parentheses are only accepted when
// allow_groups is set.
RawGraph parse_syntax(std::string_view text, bool allow_groups);

struct WriterArc {
  int to;
  int edge;
};

using AtomTextFn = std::function<std::string(int atom)>;
// Symbol written before the atom `to` when reached from `from`.
using BondTextFn = std::function<std::string(int edge, int from, int to)>;

// Depth-first serialization. Traversal starts from the lowest-ranked atom of
// each component and visits neighbors in rank order, so the output is a
// function of the ranks alone. Returns one string per connected component,
// ordered by each component's lowest rank.
std::vector<std::string>
write_components(const std::vector<std::vector<WriterArc>> &adjacency,
                 std::span<const int> rank, const AtomTextFn &atom_text,
                 const BondTextFn &bond_text);

}  // namespace roundtrip::internal

#endif  // ROUNDTRIP_CHEM_SMILES_SYNTAX_H_
