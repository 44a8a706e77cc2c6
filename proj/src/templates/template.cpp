//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/template.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "roundtrip/chem/canon.h"
#include "roundtrip/chem/smiles.h"

namespace roundtrip {

std::string_view to_string(Direction direction) {
  return direction == Direction::kRetro ? "retro" : "forward";
}

Direction direction_from_string(std::string_view text) {
  if (text == "retro") return Direction::kRetro;
  if (text == "forward") return Direction::kForward;
  throw std::invalid_argument("unknown template direction: " + std::string(text));
}

std::string ReactionTemplate::key() const {
  return write_pattern(product) + ">>" + write_patterns(reactants);
}

void validate_template(const ReactionTemplate &t) {
  if (t.product.atoms.empty()) throw TemplateError("empty product pattern");
  std::map<int, int> product_labels;
  for (const PatternAtom &a : t.product.atoms) {
    if (a.label != 0 && ++product_labels[a.label] > 1) {
      throw TemplateError("label repeated in product pattern");
    }
  }
  std::map<int, int> reactant_labels;
  for (const Pattern &p : t.reactants) {
    for (const PatternAtom &a : p.atoms) {
      if (a.label != 0 && ++reactant_labels[a.label] > 1) {
        throw TemplateError("label repeated in reactant patterns");
      }
    }
  }
  if (product_labels != reactant_labels) {
    throw TemplateError("labels differ between template sides");
  }
  auto check_bonds = [](const Pattern &p) {
    for (const PatternBond &b : p.bonds) {
      if (b.begin < 0 || b.end < 0 || b.begin >= p.num_atoms() ||
          b.end >= p.num_atoms() || b.begin == b.end) {
        throw TemplateError("invalid pattern bond");
      }
    }
  };
  check_bonds(t.product);
  for (const Pattern &p : t.reactants) check_bonds(p);
}

namespace {

constexpr int kCorrespondence = 10;
constexpr int kMembership = 11;

std::uint64_t atom_color(const PatternAtom &a, std::uint64_t side) {
  const std::uint64_t h = a.hydrogens ? static_cast<std::uint64_t>(*a.hydrogens) + 1 : 0;
  return (side << 56) | (static_cast<std::uint64_t>(a.label != 0) << 52) |
         (static_cast<std::uint64_t>(a.element) << 40) |
         (static_cast<std::uint64_t>(a.charge + 128) << 32) | (h << 24) |
         static_cast<std::uint64_t>(a.aromatic);
}

Pattern reorder(const Pattern &p, std::span<const int> rank_of_atom) {
  std::vector<int> order(p.atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rank_of_atom[a] < rank_of_atom[b];
  });
  std::vector<int> position(p.atoms.size());
  Pattern out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = static_cast<int>(k);
    out.atoms.push_back(p.atoms[order[k]]);
  }
  for (const PatternBond &b : p.bonds) {
    int u = position[b.begin];
    int v = position[b.end];
    if (u > v) std::swap(u, v);
    out.bonds.push_back({u, v, b.order});
  }
  std::sort(out.bonds.begin(), out.bonds.end(), [](const PatternBond &x, const PatternBond &y) {
    return std::tie(x.begin, x.end) < std::tie(y.begin, y.end);
  });
  return out;
}

}  // namespace

ReactionTemplate canonicalize_template(const ReactionTemplate &t) {
  validate_template(t);
  ColoredGraph g;
  std::map<int, int> product_vertex_of_label;
  const int np = t.product.num_atoms();
  for (int i = 0; i < np; ++i) {
    g.colors.push_back(atom_color(t.product.atoms[i], 0));
    if (t.product.atoms[i].label != 0) product_vertex_of_label[t.product.atoms[i].label] = i;
  }
  for (const PatternBond &b : t.product.bonds) {
    g.edges.push_back({b.begin, b.end, static_cast<int>(b.order)});
  }
  std::vector<int> offset;
  for (const Pattern &p : t.reactants) {
    offset.push_back(static_cast<int>(g.colors.size()));
    for (const PatternAtom &a : p.atoms) {
      if (a.label != 0) {
        g.edges.push_back({product_vertex_of_label.at(a.label),
                           static_cast<int>(g.colors.size()), kCorrespondence});
      }
      g.colors.push_back(atom_color(a, 1));
    }
    for (const PatternBond &b : p.bonds) {
      g.edges.push_back({offset.back() + b.begin, offset.back() + b.end,
                         static_cast<int>(b.order)});
    }
  }
  std::vector<int> fragment_vertex;
  for (std::size_t j = 0; j < t.reactants.size(); ++j) {
    fragment_vertex.push_back(static_cast<int>(g.colors.size()));
    g.colors.push_back(std::uint64_t{2} << 56);
    for (int i = 0; i < t.reactants[j].num_atoms(); ++i) {
      g.edges.push_back({fragment_vertex.back(), offset[j] + i, kMembership});
    }
  }
  const std::vector<int> rank = canonical_labeling(g).rank;

  ReactionTemplate out;
  out.radius = t.radius;
  out.support = t.support;
  out.id = t.id;
  out.product = reorder(t.product, std::span<const int>(rank).subspan(0, np));

  std::map<int, int> relabel;
  for (PatternAtom &a : out.product.atoms) {
    if (a.label == 0) continue;
    const int fresh = static_cast<int>(relabel.size()) + 1;
    relabel[a.label] = fresh;
    a.label = fresh;
  }

  std::vector<int> pattern_order(t.reactants.size());
  std::iota(pattern_order.begin(), pattern_order.end(), 0);
  std::sort(pattern_order.begin(), pattern_order.end(), [&](int a, int b) {
    return rank[fragment_vertex[a]] < rank[fragment_vertex[b]];
  });
  for (int j : pattern_order) {
    const Pattern &p = t.reactants[j];
    Pattern q = reorder(p, std::span<const int>(rank).subspan(offset[j], p.atoms.size()));
    for (PatternAtom &a : q.atoms) {
      if (a.label != 0) a.label = relabel.at(a.label);
    }
    out.reactants.push_back(std::move(q));
  }
  return out;
}

std::string template_text(const ReactionTemplate &t, Direction direction) {
  const std::string product = write_pattern(t.product);
  const std::string reactants = write_patterns(t.reactants);
  return direction == Direction::kRetro ? product + ">>" + reactants
                                        : reactants + ">>" + product;
}

ReactionTemplate parse_template_text(std::string_view text, Direction direction) {
  const std::size_t sep = text.find(">>");
  if (sep == std::string_view::npos || text.find(">>", sep + 2) != std::string_view::npos) {
    throw TemplateError("template text needs exactly one '>>'");
  }
  std::string_view left = text.substr(0, sep);
  std::string_view right = text.substr(sep + 2);
  if (direction == Direction::kForward) std::swap(left, right);
  ReactionTemplate t;
  t.product = parse_pattern(left);
  t.reactants = parse_patterns(right);
  validate_template(t);
  return t;
}

}  // namespace roundtrip
