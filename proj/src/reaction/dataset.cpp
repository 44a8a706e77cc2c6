//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/reaction/dataset.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "roundtrip/chem/smiles.h"

namespace roundtrip {

ReactionDataset::ReactionDataset(std::vector<Reaction> reactions)
    : reactions_(std::move(reactions)) {
  for (int i = 0; i < static_cast<int>(reactions_.size()); ++i) {
    index_[reactions_[i].product.canonical_smiles()].push_back(i);
  }
}

const std::vector<int> &ReactionDataset::producing(const std::string &product) const {
  static const std::vector<int> kNone;
  auto it = index_.find(product);
  return it == index_.end() ? kNone : it->second;
}

ReactionDataset deduplicate(std::vector<Reaction> reactions, DedupStats *stats) {
  DedupStats local;
  local.input = static_cast<int>(reactions.size());
  std::vector<Reaction> kept;
  std::unordered_map<std::string, std::size_t> seen;
  for (Reaction &r : reactions) {
    const std::string &product = r.product.canonical_smiles();
    const bool self = std::any_of(r.reactants.begin(), r.reactants.end(),
                                  [&](const Molecule &m) {
                                    return m.canonical_smiles() == product;
                                  });
    if (self) {
      ++local.self_reactions;
      continue;
    }
    auto [it, inserted] = seen.emplace(r.canonical_key(), kept.size());
    if (!inserted) {
      ++local.duplicates;
      kept[it->second].count += r.count;
      continue;
    }
    kept.push_back(std::move(r));
  }
  if (stats != nullptr) *stats = local;
  return ReactionDataset(std::move(kept));
}

ReactionDataset ingest_reactions(std::istream &in, IngestStats *stats,
                                 std::vector<std::string> *drop_log) {
  IngestStats local;
  std::vector<Reaction> parsed;
  std::string line;
  while (std::getline(in, line)) {
    ++local.lines;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string text = line.substr(first);
    std::string id = std::to_string(local.lines);
    const std::size_t ws = text.find_first_of(" \t");
    if (ws != std::string::npos) {
      const std::size_t id_start = text.find_first_not_of(" \t", ws);
      if (id_start != std::string::npos && text[id_start] != '|') {
        const std::size_t id_end = text.find_first_of(" \t\r", id_start);
        id = text.substr(id_start, id_end == std::string::npos ? id_end : id_end - id_start);
      }
      text.resize(ws);
    }
    try {
      parsed.push_back(parse_reaction_smiles(text, id));
      ++local.parsed;
    } catch (const std::exception &e) {
      ++local.dropped;
      if (drop_log != nullptr) {
        drop_log->push_back("line " + std::to_string(local.lines) + ": " + e.what());
      }
    }
  }
  ReactionDataset ds = deduplicate(std::move(parsed), &local.dedup);
  if (stats != nullptr) *stats = local;
  return ds;
}

void write_dataset_jsonl(const ReactionDataset &dataset, std::ostream &out) {
  for (const Reaction &r : dataset.reactions()) {
    nlohmann::ordered_json j;
    j["id"] = r.source_id;
    j["reactants"] = r.reactant_smiles();
    j["product"] = r.product.canonical_smiles();
    j["count"] = r.count;
    if (r.atom_map) j["mapped"] = r.mapped_smiles();
    out << j.dump() << '\n';
  }
}

ReactionDataset read_dataset_jsonl(std::istream &in) {
  std::vector<Reaction> reactions;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      const std::string id = j.at("id").get<std::string>();
      Reaction r;
      if (j.contains("mapped")) {
        r = parse_reaction_smiles(j.at("mapped").get<std::string>(), id);
      } else {
        std::string text;
        for (const auto &s : j.at("reactants")) {
          if (!text.empty()) text += '.';
          text += s.get<std::string>();
        }
        text += ">>" + j.at("product").get<std::string>();
        r = parse_reaction_smiles(text, id);
      }
      r.count = j.value("count", 1);
      reactions.push_back(std::move(r));
    } catch (const std::exception &e) {
      throw std::runtime_error("dataset line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ReactionDataset(std::move(reactions));
}

}  // namespace roundtrip
