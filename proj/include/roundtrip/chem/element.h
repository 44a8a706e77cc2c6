//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CHEM_ELEMENT_H_
#define ROUNDTRIP_CHEM_ELEMENT_H_

#include <span>
#include <string_view>

namespace roundtrip {

inline constexpr int kMaxAtomicNumber = 118;

// Returns 0 for unknown symbols. Symbols are case sensitive ("Cl", not "CL").
int atomic_number(std::string_view symbol);

// Returns an empty view for out-of-range atomic numbers.
std::string_view element_symbol(int atomic_number);

// B, C, N, O, P, S, F, Cl, Br, I.
bool is_organic_subset(int atomic_number);

// Elements that may be written in lowercase (aromatic) form.
bool can_be_aromatic(int atomic_number);

// Standard valences in increasing order, used for implicit hydrogen
// computation of organic-subset atoms. Empty for other elements.
std::span<const int> default_valences(int atomic_number);

// Hydrogen count an unbracketed atom would receive in SMILES given the sum of
// its explicit bond orders (aromatic bonds counted as 1).
int implicit_hydrogens(int atomic_number, bool aromatic, int bond_order_sum);

}  // namespace roundtrip

#endif  // ROUNDTRIP_CHEM_ELEMENT_H_
