//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_REACTION_DATASET_H_
#define ROUNDTRIP_REACTION_DATASET_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "roundtrip/reaction/reaction.h"

namespace roundtrip {

class ReactionDataset {
public:
  ReactionDataset() = default;
  // Reactions must already be unique under Reaction::canonical_key.
  explicit ReactionDataset(std::vector<Reaction> reactions);

  const std::vector<Reaction> &reactions() const { return reactions_; }
  std::size_t size() const { return reactions_.size(); }
  // Indices of reactions whose product has this canonical SMILES.
  const std::vector<int> &producing(const std::string &product) const;
  const std::map<std::string, std::vector<int>> &index() const { return index_; }

private:
  std::vector<Reaction> reactions_;
  std::map<std::string, std::vector<int>> index_;
};

struct DedupStats {
  int input = 0;
  int self_reactions = 0;
  int duplicates = 0;
};

// Drops reactions whose product is also a reactant and collapses duplicates
// of (reactant multiset, product), keeping the first occurrence and summing
// counts.
ReactionDataset deduplicate(std::vector<Reaction> reactions,
                            DedupStats *stats = nullptr);

struct IngestStats {
  int lines = 0;
  int parsed = 0;
  int dropped = 0;
  DedupStats dedup;
};

// Reads one reaction SMILES per line; blank lines and lines starting with
// '#' are skipped, unparsable lines counted as dropped. The source id is the
// 1-based line number unless the line carries a second whitespace field.
ReactionDataset ingest_reactions(std::istream &in, IngestStats *stats = nullptr,
                                 std::vector<std::string> *drop_log = nullptr);

// JSONL: {"id", "reactants": [...], "product", "count", "mapped"?}.
void write_dataset_jsonl(const ReactionDataset &dataset, std::ostream &out);
// Throws std::runtime_error on malformed records.
ReactionDataset read_dataset_jsonl(std::istream &in);

}  // namespace roundtrip

#endif  // ROUNDTRIP_REACTION_DATASET_H_
