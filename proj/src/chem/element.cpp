//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/chem/element.h"

#include <array>
#include <string_view>

namespace roundtrip {
namespace {

constexpr std::array<std::string_view, kMaxAtomicNumber + 1> kSymbols = {
    "",   "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
    "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
    "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
    "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
    "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
    "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
    "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
};

constexpr std::array<int, 1> kValB = {3};
constexpr std::array<int, 1> kValC = {4};
constexpr std::array<int, 2> kValN = {3, 5};
constexpr std::array<int, 1> kValO = {2};
constexpr std::array<int, 2> kValP = {3, 5};
constexpr std::array<int, 3> kValS = {2, 4, 6};
constexpr std::array<int, 1> kValHalogen = {1};

}  // namespace

int atomic_number(std::string_view symbol) {
  for (int z = 1; z <= kMaxAtomicNumber; ++z) {
    if (kSymbols[z] == symbol) return z;
  }
  return 0;
}

std::string_view element_symbol(int atomic_number) {
  if (atomic_number < 1 || atomic_number > kMaxAtomicNumber) return {};
  return kSymbols[atomic_number];
}

bool is_organic_subset(int atomic_number) {
  return !default_valences(atomic_number).empty();
}

bool can_be_aromatic(int atomic_number) {
  switch (atomic_number) {
  case 5:   // b
  case 6:   // c
  case 7:   // n
  case 8:   // o
  case 15:  // p
  case 16:  // s
  case 33:  // as
  case 34:  // se
    return true;
  default:
    return false;
  }
}

std::span<const int> default_valences(int atomic_number) {
  switch (atomic_number) {
  case 5:
    return kValB;
  case 6:
    return kValC;
  case 7:
    return kValN;
  case 8:
    return kValO;
  case 15:
    return kValP;
  case 16:
    return kValS;
  case 9:
  case 17:
  case 35:
  case 53:
    return kValHalogen;
  default:
    return {};
  }
}

int implicit_hydrogens(int atomic_number, bool aromatic, int bond_order_sum) {
  // An aromatic atom contributes one extra unit for its share of the pi
  // system.
  const int used = bond_order_sum + (aromatic ? 1 : 0);
  for (int valence : default_valences(atomic_number)) {
    if (valence >= used) return valence - used;
  }
  return 0;
}

}  // namespace roundtrip
