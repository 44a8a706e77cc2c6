//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/chem/molecule.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roundtrip/chem/smiles.h"

namespace roundtrip {
namespace internal {
// Defined in smiles.cpp.
std::pair<std::vector<int>, std::string>
canonicalize(const std::vector<Atom> &atoms, const std::vector<Bond> &bonds,
             const std::vector<std::vector<Neighbor>> &adjacency);
}  // namespace internal

int valence_contribution(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
  case BondOrder::kAromatic:
    return 1;
  case BondOrder::kDouble:
    return 2;
  case BondOrder::kTriple:
    return 3;
  }
  return 1;
}

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)),
      adjacency_(atoms_.size()) {
  const int n = num_atoms();
  for (const Bond &b : bonds_) {
    if (b.begin < 0 || b.end < 0 || b.begin >= n || b.end >= n) {
      throw std::invalid_argument("bond references a missing atom");
    }
    if (b.begin == b.end) {
      throw std::invalid_argument("bond connects an atom to itself");
    }
    for (const Neighbor &nb : adjacency_[b.begin]) {
      if (nb.atom == b.end) throw std::invalid_argument("duplicate bond");
    }
    adjacency_[b.begin].push_back({b.end, b.order});
    adjacency_[b.end].push_back({b.begin, b.order});
  }
  for (const Atom &a : atoms_) {
    if (a.hydrogens < 0) {
      throw std::invalid_argument("negative hydrogen count");
    }
  }
  auto [ranks, smiles] = internal::canonicalize(atoms_, bonds_, adjacency_);
  ranks_ = std::move(ranks);
  canonical_ = std::move(smiles);
}

std::optional<BondOrder> Molecule::bond_between(int a, int b) const {
  for (const Neighbor &nb : adjacency_[a]) {
    if (nb.atom == b) return nb.order;
  }
  return std::nullopt;
}

int Molecule::bond_order_sum(int atom) const {
  int sum = 0;
  for (const Neighbor &nb : adjacency_[atom]) {
    sum += valence_contribution(nb.order);
  }
  return sum;
}

int Molecule::heavy_atom_count() const {
  return static_cast<int>(std::count_if(
      atoms_.begin(), atoms_.end(), [](const Atom &a) { return a.element != 1; }));
}

int Molecule::num_components() const {
  return static_cast<int>(connected_components(*this).size());
}

Molecule Molecule::renumbered(std::span<const int> new_index) const {
  if (static_cast<int>(new_index.size()) != num_atoms()) {
    throw std::invalid_argument("renumbering has the wrong length");
  }
  std::vector<Atom> atoms(atoms_.size());
  for (int i = 0; i < num_atoms(); ++i) atoms[new_index[i]] = atoms_[i];
  std::vector<Bond> bonds;
  bonds.reserve(bonds_.size());
  for (const Bond &b : bonds_) {
    bonds.push_back({new_index[b.begin], new_index[b.end], b.order});
  }
  return Molecule(std::move(atoms), std::move(bonds));
}

Molecule Molecule::without_atom_maps() const {
  if (!has_atom_maps()) return *this;
  std::vector<Atom> atoms = atoms_;
  for (Atom &a : atoms) a.map_number = 0;
  return Molecule(std::move(atoms), bonds_);
}

bool Molecule::has_atom_maps() const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const Atom &a) { return a.map_number != 0; });
}

std::vector<bool> ring_bonds(const Molecule &mol) {
  // Bridges via DFS low-link; every non-bridge bond lies on a cycle.
  const int n = mol.num_atoms();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> ring(mol.num_bonds(), true);

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < mol.num_bonds(); ++i) {
    const Bond &b = mol.bonds()[i];
    adj[b.begin].emplace_back(b.end, i);
    adj[b.end].emplace_back(b.begin, i);
  }

  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (auto [to, edge] : adj[v]) {
      if (edge == parent_edge) continue;
      if (disc[to] >= 0) {
        low[v] = std::min(low[v], disc[to]);
      } else {
        dfs(to, edge);
        low[v] = std::min(low[v], low[to]);
        if (low[to] > disc[v]) ring[edge] = false;
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return ring;
}

std::vector<bool> ring_atoms(const Molecule &mol) {
  std::vector<bool> bonds = ring_bonds(mol);
  std::vector<bool> atoms(mol.num_atoms(), false);
  for (int i = 0; i < mol.num_bonds(); ++i) {
    if (bonds[i]) {
      atoms[mol.bonds()[i].begin] = true;
      atoms[mol.bonds()[i].end] = true;
    }
  }
  return atoms;
}

std::vector<std::vector<int>> connected_components(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> result;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(result.size());
    result.emplace_back();
    std::vector<int> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      result[id].push_back(v);
      for (const Neighbor &nb : mol.neighbors(v)) {
        if (comp[nb.atom] < 0) {
          comp[nb.atom] = id;
          stack.push_back(nb.atom);
        }
      }
    }
    std::sort(result[id].begin(), result[id].end());
  }
  return result;
}

Molecule induced_subgraph(const Molecule &mol, std::span<const int> atoms) {
  std::vector<int> index(mol.num_atoms(), -1);
  std::vector<Atom> sub_atoms;
  sub_atoms.reserve(atoms.size());
  for (int a : atoms) {
    index[a] = static_cast<int>(sub_atoms.size());
    sub_atoms.push_back(mol.atom(a));
  }
  std::vector<Bond> sub_bonds;
  for (const Bond &b : mol.bonds()) {
    if (index[b.begin] >= 0 && index[b.end] >= 0) {
      sub_bonds.push_back({index[b.begin], index[b.end], b.order});
    }
  }
  return Molecule(std::move(sub_atoms), std::move(sub_bonds));
}

}  // namespace roundtrip
