//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_NETWORK_NETWORK_H_
#define ROUNDTRIP_NETWORK_NETWORK_H_

#include <map>
#include <string>
#include <vector>

#include "roundtrip/reaction/dataset.h"

namespace roundtrip {

// Bipartite molecule/reaction graph. Molecule nodes are numbered in
// canonical SMILES order; reaction nodes follow dataset order.
class ReactionNetwork {
public:
  struct ReactionNode {
    // Canonical SMILES order; a molecule used twice appears twice.
    std::vector<int> reactants;
    int product;
    int count;
    std::string key;
  };

  ReactionNetwork() = default;
  explicit ReactionNetwork(const ReactionDataset &ds);

  int num_molecules() const { return static_cast<int>(smiles_.size()); }
  int num_reactions() const { return static_cast<int>(reactions_.size()); }
  // Directed edges: one per distinct (reactant, reaction) pair plus one per
  // reaction for its product.
  int num_edges() const;

  // -1 when absent.
  int find(const std::string &smiles) const;
  const std::string &smiles(int molecule) const { return smiles_[molecule]; }
  const ReactionNode &reaction(int r) const { return reactions_[r]; }

  // Reactions producing / consuming the molecule, ascending.
  const std::vector<int> &producers(int molecule) const { return producers_[molecule]; }
  const std::vector<int> &consumers(int molecule) const { return consumers_[molecule]; }
  int out_degree(int molecule) const { return static_cast<int>(consumers_[molecule].size()); }

private:
  std::vector<std::string> smiles_;
  std::map<std::string, int> index_;
  std::vector<ReactionNode> reactions_;
  std::vector<std::vector<int>> producers_;
  std::vector<std::vector<int>> consumers_;
};

ReactionNetwork build_network(const ReactionDataset &ds);

// Canonical SMILES of molecules consumed by no reaction but produced by at
// least one, sorted.
std::vector<std::string> find_targets(const ReactionNetwork &net);

}  // namespace roundtrip

#endif  // ROUNDTRIP_NETWORK_NETWORK_H_
