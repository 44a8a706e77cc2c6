//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/extract.h"

#include <algorithm>
#include <map>
#include <set>

namespace roundtrip {

namespace {

// reverse[m][x] is the product atom mapped to reactant atom x of molecule m,
// or -1.
std::vector<std::vector<int>> reverse_map(const Reaction &r) {
  std::vector<std::vector<int>> reverse(r.reactants.size());
  for (std::size_t m = 0; m < r.reactants.size(); ++m) {
    reverse[m].assign(r.reactants[m].num_atoms(), -1);
  }
  const AtomMap &map = *r.atom_map;
  for (std::size_t a = 0; a < map.size(); ++a) {
    if (map[a]) reverse[map[a]->molecule][map[a]->atom] = static_cast<int>(a);
  }
  return reverse;
}

const AtomMap &require_map(const Reaction &r) {
  if (!r.atom_map) throw TemplateError("reaction has no atom map");
  for (const auto &ref : *r.atom_map) {
    if (ref) return *r.atom_map;
  }
  throw TemplateError("reaction has no mapped atoms");
}

using Signature = std::vector<std::pair<int, int>>;

// Atoms within `radius` bonds of the seeds.
std::vector<bool> ball(const Molecule &mol, const std::vector<int> &seeds, int radius) {
  std::vector<int> dist(mol.num_atoms(), -1);
  std::vector<int> queue;
  for (int s : seeds) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int v = queue[q];
    if (dist[v] == radius) continue;
    for (const Neighbor &nb : mol.neighbors(v)) {
      if (dist[nb.atom] < 0) {
        dist[nb.atom] = dist[v] + 1;
        queue.push_back(nb.atom);
      }
    }
  }
  std::vector<bool> in(mol.num_atoms());
  for (int v = 0; v < mol.num_atoms(); ++v) in[v] = dist[v] >= 0;
  return in;
}

Pattern induced_pattern(const Molecule &mol, const std::vector<int> &atoms,
                        const std::vector<int> &labels,
                        const std::vector<bool> &constrain_h) {
  Pattern p;
  std::vector<int> local(mol.num_atoms(), -1);
  for (int v : atoms) {
    local[v] = p.num_atoms();
    const Atom &a = mol.atom(v);
    PatternAtom pa{a.element, a.aromatic, a.charge, std::nullopt, labels[v]};
    if (constrain_h[v]) pa.hydrogens = a.hydrogens;
    p.atoms.push_back(pa);
  }
  for (const Bond &b : mol.bonds()) {
    if (local[b.begin] >= 0 && local[b.end] >= 0) {
      p.bonds.push_back({local[b.begin], local[b.end], b.order});
    }
  }
  return p;
}

}  // namespace

std::vector<int> detect_reaction_center(const Reaction &r) {
  const AtomMap &map = require_map(r);
  const std::vector<std::vector<int>> reverse = reverse_map(r);
  std::vector<int> center;
  for (int a = 0; a < r.product.num_atoms(); ++a) {
    if (!map[a]) {
      center.push_back(a);
      continue;
    }
    const Molecule &src = r.reactants[map[a]->molecule];
    const Atom &pa = r.product.atom(a);
    const Atom &ra = src.atom(map[a]->atom);
    bool changed = pa.element != ra.element || pa.charge != ra.charge ||
                   pa.hydrogens != ra.hydrogens || pa.aromatic != ra.aromatic;
    if (!changed) {
      // Neighbors expressed as product atom indices (-1 when unmapped).
      Signature before;
      Signature after;
      for (const Neighbor &nb : src.neighbors(map[a]->atom)) {
        before.emplace_back(reverse[map[a]->molecule][nb.atom], static_cast<int>(nb.order));
      }
      for (const Neighbor &nb : r.product.neighbors(a)) {
        after.emplace_back(map[nb.atom] ? nb.atom : -1, static_cast<int>(nb.order));
      }
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      changed = before != after;
    }
    if (changed) center.push_back(a);
  }
  return center;
}

ReactionTemplate extract_template(const Reaction &r, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const std::vector<int> center = detect_reaction_center(r);
  if (center.empty()) throw TemplateError("reaction center is empty");
  const AtomMap &map = *r.atom_map;
  const std::vector<std::vector<int>> reverse = reverse_map(r);
  const std::size_t nr = r.reactants.size();

  std::vector<bool> is_center(r.product.num_atoms(), false);
  for (int a : center) is_center[a] = true;

  // Scope on the product side, then widened by the reactant-side ball.
  std::vector<bool> scope = ball(r.product, center, radius);
  for (std::size_t m = 0; m < nr; ++m) {
    std::vector<int> seeds;
    for (int a : center) {
      if (map[a] && map[a]->molecule == static_cast<int>(m)) seeds.push_back(map[a]->atom);
    }
    if (seeds.empty()) continue;
    const std::vector<bool> in = ball(r.reactants[m], seeds, radius);
    for (int x = 0; x < r.reactants[m].num_atoms(); ++x) {
      if (in[x] && reverse[m][x] >= 0) scope[reverse[m][x]] = true;
    }
  }

  ReactionTemplate t;
  t.radius = radius;
  t.support = r.count;
  {
    std::vector<int> atoms;
    std::vector<int> labels(r.product.num_atoms(), 0);
    std::vector<bool> constrain(r.product.num_atoms(), false);
    for (int a = 0; a < r.product.num_atoms(); ++a) {
      if (!scope[a]) continue;
      atoms.push_back(a);
      labels[a] = map[a] ? a + 1 : 0;
      constrain[a] = is_center[a];
    }
    t.product = induced_pattern(r.product, atoms, labels, constrain);
  }
  for (std::size_t m = 0; m < nr; ++m) {
    const Molecule &mol = r.reactants[m];
    const bool contributes = std::any_of(reverse[m].begin(), reverse[m].end(),
                                         [](int a) { return a >= 0; });
    if (!contributes) continue;
    std::vector<int> atoms;
    std::vector<int> labels(mol.num_atoms(), 0);
    std::vector<bool> constrain(mol.num_atoms(), false);
    for (int x = 0; x < mol.num_atoms(); ++x) {
      const int a = reverse[m][x];
      if (a >= 0 && !scope[a]) continue;
      atoms.push_back(x);
      labels[x] = a >= 0 ? a + 1 : 0;
      constrain[x] = a < 0 || is_center[a];
    }
    t.reactants.push_back(induced_pattern(mol, atoms, labels, constrain));
  }
  return canonicalize_template(t);
}

TemplateSet extract_templates(const ReactionDataset &ds, int radius) {
  TemplateSet out;
  std::map<std::string, ReactionTemplate> merged;
  for (const Reaction &r : ds.reactions()) {
    ++out.stats.reactions;
    if (!r.atom_map) {
      ++out.stats.unmapped;
      continue;
    }
    ReactionTemplate t;
    try {
      t = extract_template(r, radius);
    } catch (const TemplateError &) {
      ++out.stats.failed;
      continue;
    }
    ++out.stats.extracted;
    auto [it, inserted] = merged.try_emplace(t.key(), t);
    if (!inserted) it->second.support += t.support;
  }

  std::vector<std::pair<std::string, ReactionTemplate>> sorted(merged.begin(), merged.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
    return a.second.support > b.second.support;
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ReactionTemplate &t = sorted[i].second;
    t.id = static_cast<int>(i);
    out.retro.push_back(RetroTemplate{t});
    out.forward.push_back(ForwardTemplate{t});
  }
  return out;
}

}  // namespace roundtrip
