//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/apply.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>

#include "roundtrip/templates/matcher.h"

namespace roundtrip {

namespace {

using AtomPair = std::pair<int, int>;

AtomPair ordered(int a, int b) { return a < b ? AtomPair{a, b} : AtomPair{b, a}; }

struct HostGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
};

struct Rewritten {
  HostGraph graph;
  // Per B-side pattern, the result atoms it covers.
  std::vector<std::vector<int>> covered;
};

// Replaces the A-side patterns, embedded at `embeddings`, by the B-side
// patterns. Fails when a deleted atom keeps an unmatched bond or when a
// B-side bond would duplicate a surviving one.
std::optional<Rewritten> rewrite(const HostGraph &host,
                                 std::span<const Pattern *const> a_side,
                                 std::span<const Embedding> embeddings,
                                 std::span<const Pattern *const> b_side) {
  const int n = static_cast<int>(host.atoms.size());
  std::map<int, int> host_of_label;
  std::vector<bool> deleted(n, false);
  std::set<AtomPair> removed;
  for (std::size_t k = 0; k < a_side.size(); ++k) {
    const Pattern &p = *a_side[k];
    const Embedding &e = embeddings[k];
    for (int i = 0; i < p.num_atoms(); ++i) {
      if (p.atoms[i].label != 0) {
        host_of_label[p.atoms[i].label] = e[i];
      } else {
        deleted[e[i]] = true;
      }
    }
    for (const PatternBond &b : p.bonds) removed.insert(ordered(e[b.begin], e[b.end]));
  }

  Rewritten out;
  HostGraph &g = out.graph;
  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (deleted[v]) continue;
    index[v] = static_cast<int>(g.atoms.size());
    g.atoms.push_back(host.atoms[v]);
    g.atoms.back().map_number = 0;
  }
  std::set<AtomPair> present;
  for (const Bond &b : host.bonds) {
    const bool matched = removed.count(ordered(b.begin, b.end)) > 0;
    if (deleted[b.begin] || deleted[b.end]) {
      if (!matched) return std::nullopt;
      continue;
    }
    if (matched) continue;
    g.bonds.push_back({index[b.begin], index[b.end], b.order});
    present.insert(ordered(index[b.begin], index[b.end]));
  }

  for (const Pattern *pattern : b_side) {
    const Pattern &p = *pattern;
    std::vector<int> local(p.atoms.size());
    for (int i = 0; i < p.num_atoms(); ++i) {
      const PatternAtom &pa = p.atoms[i];
      if (pa.label == 0) {
        local[i] = static_cast<int>(g.atoms.size());
        g.atoms.push_back({pa.element, pa.charge, pa.aromatic, pa.hydrogens.value_or(0), 0});
        continue;
      }
      const auto it = host_of_label.find(pa.label);
      if (it == host_of_label.end()) return std::nullopt;
      local[i] = index[it->second];
      if (pa.hydrogens) {
        Atom &a = g.atoms[local[i]];
        a.element = pa.element;
        a.charge = pa.charge;
        a.aromatic = pa.aromatic;
        a.hydrogens = *pa.hydrogens;
      }
    }
    for (const PatternBond &b : p.bonds) {
      const int u = local[b.begin];
      const int v = local[b.end];
      if (!present.insert(ordered(u, v)).second) return std::nullopt;
      g.bonds.push_back({u, v, b.order});
    }
    out.covered.push_back(std::move(local));
  }
  return out;
}

std::vector<int> component_ids(const HostGraph &g, int &count) {
  std::vector<int> parent(g.atoms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Bond &b : g.bonds) parent[find(b.begin)] = find(b.end);
  std::vector<int> id(g.atoms.size(), -1);
  std::map<int, int> root_id;
  for (std::size_t v = 0; v < g.atoms.size(); ++v) {
    id[v] = root_id.try_emplace(find(static_cast<int>(v)), static_cast<int>(root_id.size()))
                .first->second;
  }
  count = static_cast<int>(root_id.size());
  return id;
}

// The single component covering `atoms`, or -1 when they are spread out.
int covering_component(const std::vector<int> &component, const std::vector<int> &atoms) {
  if (atoms.empty()) return -1;
  const int c = component[atoms.front()];
  for (int v : atoms) {
    if (component[v] != c) return -1;
  }
  return c;
}

Molecule extract_component(const HostGraph &g, const std::vector<int> &component, int c) {
  std::vector<int> index(g.atoms.size(), -1);
  std::vector<Atom> atoms;
  for (std::size_t v = 0; v < g.atoms.size(); ++v) {
    if (component[v] != c) continue;
    index[v] = static_cast<int>(atoms.size());
    atoms.push_back(g.atoms[v]);
  }
  std::vector<Bond> bonds;
  for (const Bond &b : g.bonds) {
    if (component[b.begin] == c) bonds.push_back({index[b.begin], index[b.end], b.order});
  }
  return Molecule(std::move(atoms), std::move(bonds));
}

HostGraph host_of(const std::vector<const Molecule *> &mols, std::vector<int> &offset) {
  HostGraph g;
  offset.clear();
  for (const Molecule *m : mols) {
    const int base = static_cast<int>(g.atoms.size());
    offset.push_back(base);
    g.atoms.insert(g.atoms.end(), m->atoms().begin(), m->atoms().end());
    for (const Bond &b : m->bonds()) g.bonds.push_back({b.begin + base, b.end + base, b.order});
  }
  return g;
}

}  // namespace

std::vector<std::vector<Molecule>> apply_retro(const ReactionTemplate &t,
                                               const Molecule &product,
                                               std::size_t max_embeddings) {
  if (t.reactants.empty()) return {};
  std::vector<int> offset;
  const HostGraph host = host_of({&product}, offset);
  const Pattern *a_side[] = {&t.product};
  std::vector<const Pattern *> b_side;
  for (const Pattern &p : t.reactants) b_side.push_back(&p);

  std::map<std::string, std::vector<Molecule>> outcomes;
  for (const Embedding &e : find_embeddings(t.product, product, max_embeddings)) {
    const std::optional<Rewritten> r = rewrite(host, a_side, std::span(&e, 1), b_side);
    if (!r) continue;
    int count = 0;
    const std::vector<int> component = component_ids(r->graph, count);
    if (count != static_cast<int>(b_side.size())) continue;
    std::vector<int> used;
    for (const std::vector<int> &atoms : r->covered) {
      used.push_back(covering_component(component, atoms));
    }
    std::vector<int> check = used;
    std::sort(check.begin(), check.end());
    if (check.front() < 0 || std::adjacent_find(check.begin(), check.end()) != check.end()) {
      continue;
    }
    std::vector<Molecule> mols;
    bool contains_product = false;
    for (int c = 0; c < count; ++c) {
      mols.push_back(extract_component(r->graph, component, c));
      contains_product |= mols.back().canonical_smiles() == product.canonical_smiles();
    }
    if (contains_product) continue;
    std::sort(mols.begin(), mols.end(), [](const Molecule &a, const Molecule &b) {
      return a.canonical_smiles() < b.canonical_smiles();
    });
    std::string key;
    for (const Molecule &m : mols) {
      if (!key.empty()) key += '.';
      key += m.canonical_smiles();
    }
    outcomes.try_emplace(std::move(key), std::move(mols));
  }
  std::vector<std::vector<Molecule>> out;
  for (auto &[key, mols] : outcomes) out.push_back(std::move(mols));
  return out;
}

std::optional<Molecule> apply_forward(const ReactionTemplate &t,
                                      const std::vector<Molecule> &reactants,
                                      std::size_t max_attempts) {
  const std::size_t n = t.reactants.size();
  if (n == 0 || reactants.size() != n) return std::nullopt;

  std::vector<const Molecule *> sorted;
  for (const Molecule &m : reactants) sorted.push_back(&m);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Molecule *a, const Molecule *b) {
    return a->canonical_smiles() < b->canonical_smiles();
  });
  std::vector<int> offset;
  const HostGraph host = host_of(sorted, offset);
  const Pattern *b_side[] = {&t.product};

  // assign[i] is the reactant (in canonical order) matched by pattern i.
  std::vector<int> assign(n);
  std::iota(assign.begin(), assign.end(), 0);
  std::size_t attempts = 0;
  do {
    std::vector<std::vector<Embedding>> options(n);
    bool feasible = true;
    for (std::size_t i = 0; i < n && feasible; ++i) {
      options[i] = find_embeddings(t.reactants[i], *sorted[assign[i]], max_attempts);
      for (Embedding &e : options[i]) {
        for (int &v : e) v += offset[assign[i]];
      }
      feasible = !options[i].empty();
    }
    if (!feasible) continue;

    std::vector<const Pattern *> a_side;
    for (const Pattern &p : t.reactants) a_side.push_back(&p);
    std::vector<std::size_t> pick(n, 0);
    std::vector<Embedding> chosen(n);
    while (true) {
      if (++attempts > max_attempts) return std::nullopt;
      for (std::size_t i = 0; i < n; ++i) chosen[i] = options[i][pick[i]];
      if (const std::optional<Rewritten> r = rewrite(host, a_side, chosen, b_side)) {
        int count = 0;
        const std::vector<int> component = component_ids(r->graph, count);
        const int c = covering_component(component, r->covered[0]);
        if (c >= 0) return extract_component(r->graph, component, c);
      }
      // Odometer over the embedding lists, last pattern fastest.
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++pick[i] < options[i].size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = n + 1;
          break;
        }
      }
      if (i == n + 1) break;
    }
  } while (std::next_permutation(assign.begin(), assign.end()));
  return std::nullopt;
}

}  // namespace roundtrip
