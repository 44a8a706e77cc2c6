//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CHEM_MOLECULE_H_
#define ROUNDTRIP_CHEM_MOLECULE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roundtrip {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

// Contribution of a bond to an atom's valence; aromatic bonds count as one
// (the aromatic atom itself adds the extra pi unit, see implicit_hydrogens).
int valence_contribution(BondOrder order);

struct Atom {
  int element = 6;
  int charge = 0;
  bool aromatic = false;
  // Total attached hydrogens not represented as explicit atoms.
  int hydrogens = 0;
  // Reaction atom-map number; 0 when unmapped. Ignored by canonicalization.
  int map_number = 0;

  bool operator==(const Atom &) const = default;
};

struct Bond {
  int begin;
  int end;
  BondOrder order;
};

struct Neighbor {
  int atom;
  BondOrder order;
};

// Attributed molecular graph. Immutable once constructed; the canonical
// SMILES and canonical atom ranks are computed at construction so instances
// can be shared freely between threads.
class Molecule {
public:
  Molecule() = default;

  // Throws std::invalid_argument if a bond references an invalid or
  // identical pair of atoms, or if a pair is bonded twice.
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds);

  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }
  const Atom &atom(int i) const { return atoms_[i]; }
  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  std::span<const Neighbor> neighbors(int atom) const {
    return adjacency_[atom];
  }
  std::optional<BondOrder> bond_between(int a, int b) const;

  // Sum of valence_contribution over the atom's bonds.
  int bond_order_sum(int atom) const;
  int heavy_atom_count() const;
  int num_components() const;

  const std::string &canonical_smiles() const { return canonical_; }
  // Position of each atom in the canonical order (a permutation of
  // [0, num_atoms)). Depends only on the isomorphism class.
  const std::vector<int> &canonical_ranks() const { return ranks_; }

  // Atom i of this molecule becomes atom new_index[i] of the result.
  Molecule renumbered(std::span<const int> new_index) const;
  Molecule without_atom_maps() const;
  bool has_atom_maps() const;

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::string canonical_;
  std::vector<int> ranks_;
};

// True when the bond lies on a cycle (is not a bridge).
std::vector<bool> ring_bonds(const Molecule &mol);
std::vector<bool> ring_atoms(const Molecule &mol);

// Connected components as lists of atom indices, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Molecule &mol);

// Induced subgraph on the given atoms, in the given order.
Molecule induced_subgraph(const Molecule &mol, std::span<const int> atoms);

}  // namespace roundtrip

#endif  // ROUNDTRIP_CHEM_MOLECULE_H_
