//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/network/network.h"

#include <algorithm>
#include <set>

namespace roundtrip {

ReactionNetwork::ReactionNetwork(const ReactionDataset &ds) {
  std::set<std::string> names;
  for (const Reaction &r : ds.reactions()) {
    for (const Molecule &m : r.reactants) names.insert(m.canonical_smiles());
    names.insert(r.product.canonical_smiles());
  }
  smiles_.assign(names.begin(), names.end());
  for (int i = 0; i < num_molecules(); ++i) index_[smiles_[i]] = i;
  producers_.resize(smiles_.size());
  consumers_.resize(smiles_.size());

  for (const Reaction &r : ds.reactions()) {
    const int id = num_reactions();
    ReactionNode node{{}, index_.at(r.product.canonical_smiles()), r.count, r.canonical_key()};
    for (const Molecule &m : r.reactants) node.reactants.push_back(index_.at(m.canonical_smiles()));
    std::vector<int> distinct = node.reactants;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int m : distinct) consumers_[m].push_back(id);
    producers_[node.product].push_back(id);
    reactions_.push_back(std::move(node));
  }
}

int ReactionNetwork::num_edges() const {
  int edges = 0;
  for (const auto &c : consumers_) edges += static_cast<int>(c.size());
  return edges + num_reactions();
}

int ReactionNetwork::find(const std::string &smiles) const {
  const auto it = index_.find(smiles);
  return it == index_.end() ? -1 : it->second;
}

ReactionNetwork build_network(const ReactionDataset &ds) { return ReactionNetwork(ds); }

std::vector<std::string> find_targets(const ReactionNetwork &net) {
  std::vector<std::string> out;
  for (int m = 0; m < net.num_molecules(); ++m) {
    if (net.out_degree(m) == 0 && !net.producers(m).empty()) out.push_back(net.smiles(m));
  }
  return out;
}

}  // namespace roundtrip
