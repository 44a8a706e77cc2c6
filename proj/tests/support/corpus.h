//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TESTS_SUPPORT_CORPUS_H_
#define ROUNDTRIP_TESTS_SUPPORT_CORPUS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "roundtrip/chem/molecule.h"

namespace roundtrip::testing {

// Hand-picked SMILES covering rings, aromatics, charges, heteroatoms and
// symmetric cases.
const std::vector<std::string> &reference_smiles();

// Random connected molecule with `heavy_atoms` heavy atoms: acyclic skeleton
// plus random ring closures and occasional fused benzene rings. Hydrogen
// counts follow default valences so every output is a plain SMILES.
Molecule random_molecule(std::mt19937_64 &rng, int heavy_atoms);

// reference_smiles() followed by random molecules until `size` entries.
std::vector<Molecule> molecule_corpus(int size, std::uint64_t seed);

// Uniformly random permutation of [0, n).
std::vector<int> random_permutation(std::mt19937_64 &rng, int n);

}  // namespace roundtrip::testing

#endif  // ROUNDTRIP_TESTS_SUPPORT_CORPUS_H_
