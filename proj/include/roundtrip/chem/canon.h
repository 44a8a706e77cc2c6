//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CHEM_CANON_H_
#define ROUNDTRIP_CHEM_CANON_H_

#include <cstdint>
#include <vector>

namespace roundtrip {

struct ColoredEdge {
  int u;
  int v;
  int label;
};

// Undirected graph with integer vertex colors and edge labels. Colors and
// labels are compared by value only; their meaning is up to the caller.
struct ColoredGraph {
  std::vector<std::uint64_t> colors;
  std::vector<ColoredEdge> edges;
};

struct CanonicalLabeling {
  // rank[v] is the position of vertex v in the canonical order. Two graphs
  // are isomorphic iff their certificates are equal.
  std::vector<int> rank;
  std::vector<std::uint64_t> certificate;
};

// Canonical labeling by color refinement followed by an
// individualization-refinement search that keeps the lexicographically
// smallest certificate. Search branches are pruned with the automorphisms
// discovered along the way, so symmetric graphs stay cheap.
CanonicalLabeling canonical_labeling(const ColoredGraph &graph);

}  // namespace roundtrip

#endif  // ROUNDTRIP_CHEM_CANON_H_
