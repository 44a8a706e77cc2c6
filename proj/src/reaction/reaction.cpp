//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/reaction/reaction.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "roundtrip/chem/smiles.h"

namespace roundtrip {
namespace {

std::string join(const std::vector<std::string> &parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<std::string> Reaction::reactant_smiles() const {
  std::vector<std::string> out;
  out.reserve(reactants.size());
  for (const Molecule &m : reactants) out.push_back(m.canonical_smiles());
  return out;
}

std::string Reaction::canonical_key() const {
  return join(reactant_smiles(), '.') + ">>" + product.canonical_smiles();
}

std::string Reaction::mapped_smiles() const {
  if (!atom_map) return {};
  std::vector<std::string> parts;
  for (const Molecule &m : reactants) {
    parts.push_back(write_smiles(m, {.atom_maps = true}));
  }
  return join(parts, '.') + ">>" + write_smiles(product, {.atom_maps = true});
}

std::optional<AtomMap> derive_atom_map(const std::vector<Molecule> &reactants,
                                       const Molecule &product) {
  std::map<int, AtomRef> by_number;
  for (int m = 0; m < static_cast<int>(reactants.size()); ++m) {
    for (int a = 0; a < reactants[m].num_atoms(); ++a) {
      const int num = reactants[m].atom(a).map_number;
      if (num == 0) continue;
      if (!by_number.emplace(num, AtomRef{m, a}).second) return std::nullopt;
    }
  }
  AtomMap map(product.num_atoms());
  std::map<int, int> seen;
  bool any = false;
  for (int a = 0; a < product.num_atoms(); ++a) {
    const int num = product.atom(a).map_number;
    if (num == 0) continue;
    if (!seen.emplace(num, a).second) return std::nullopt;
    auto it = by_number.find(num);
    if (it != by_number.end()) {
      map[a] = it->second;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return map;
}

Reaction parse_reaction_smiles(std::string_view line, std::string source_id) {
  const std::size_t ws = line.find_first_of(" \t\r\n");
  if (ws != std::string_view::npos) line = line.substr(0, ws);

  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t gt = line.find('>', start);
    fields.push_back(line.substr(start, gt == std::string_view::npos ? gt : gt - start));
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  if (fields.size() != 3) {
    throw ReactionParseError("expected reactants>reagents>product: " + std::string(line));
  }
  if (fields[0].empty()) throw ReactionParseError("empty reactant side");
  if (fields[2].empty()) throw ReactionParseError("empty product side");

  std::vector<Molecule> reactants = parse_smiles_components(fields[0]);
  std::vector<Molecule> products = parse_smiles_components(fields[2]);

  const Molecule *best = &products.front();
  for (const Molecule &p : products) {
    const int heavy = p.heavy_atom_count(), best_heavy = best->heavy_atom_count();
    if (heavy > best_heavy ||
        (heavy == best_heavy && p.canonical_smiles() < best->canonical_smiles())) {
      best = &p;
    }
  }

  Reaction r;
  r.product = *best;
  std::vector<std::pair<std::string, Molecule>> keyed;
  keyed.reserve(reactants.size());
  for (Molecule &m : reactants) {
    std::string key = m.canonical_smiles() + " " + write_smiles(m, {.atom_maps = true});
    keyed.emplace_back(std::move(key), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  for (auto &[key, m] : keyed) r.reactants.push_back(std::move(m));

  r.atom_map = derive_atom_map(r.reactants, r.product);
  if (!r.atom_map) {
    for (Molecule &m : r.reactants) m = m.without_atom_maps();
    r.product = r.product.without_atom_maps();
  }
  r.source_id = std::move(source_id);
  return r;
}

}  // namespace roundtrip
