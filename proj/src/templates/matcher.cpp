//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/matcher.h"

#include <algorithm>
#include <functional>

namespace roundtrip {

namespace {

struct PatternEdge {
  int other;
  BondOrder order;
};

class Matcher {
public:
  Matcher(const Pattern &pattern, const Molecule &host, std::size_t limit,
          bool sorted)
      : pattern_(pattern), host_(host), limit_(limit), sorted_(sorted),
        adj_(pattern.atoms.size()) {
    for (const PatternBond &b : pattern.bonds) {
      adj_[b.begin].push_back({b.end, b.order});
      adj_[b.end].push_back({b.begin, b.order});
    }
    const int n = host.num_atoms();
    by_rank_.resize(n);
    for (int v = 0; v < n; ++v) by_rank_[host.canonical_ranks()[v]] = v;
    plan_order();
  }

  std::vector<Embedding> run() {
    if (pattern_.atoms.size() > static_cast<std::size_t>(host_.num_atoms())) {
      return {};
    }
    map_.assign(pattern_.atoms.size(), -1);
    used_.assign(host_.num_atoms(), false);
    extend(0);
    if (sorted_) {
      const std::vector<int> &rank = host_.canonical_ranks();
      std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
      keyed.reserve(found_.size());
      for (std::size_t k = 0; k < found_.size(); ++k) {
        std::vector<int> key(found_[k].size());
        for (std::size_t i = 0; i < key.size(); ++i) key[i] = rank[found_[k][i]];
        keyed.emplace_back(std::move(key), k);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<Embedding> out;
      out.reserve(found_.size());
      for (const auto &[key, k] : keyed) out.push_back(std::move(found_[k]));
      return out;
    }
    return std::move(found_);
  }

private:
  // Visit pattern atoms so that each one after the first of its component
  // has an already-mapped neighbor; constrained atoms start components.
  void plan_order() {
    const int n = static_cast<int>(pattern_.atoms.size());
    std::vector<bool> placed(n, false);
    anchor_.assign(n, -1);
    for (int start = 0; start < n; ++start) {
      if (placed[start]) continue;
      std::vector<int> queue = {start};
      placed[start] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const int v = queue[q];
        order_.push_back(v);
        for (const PatternEdge &e : adj_[v]) {
          if (placed[e.other]) continue;
          placed[e.other] = true;
          anchor_[e.other] = v;
          queue.push_back(e.other);
        }
      }
    }
  }

  bool consistent(int p, int h) const {
    if (used_[h] || !atom_matches(pattern_.atoms[p], host_.atom(h))) return false;
    if (static_cast<int>(adj_[p].size()) > static_cast<int>(host_.neighbors(h).size())) {
      return false;
    }
    for (const PatternEdge &e : adj_[p]) {
      const int other = map_[e.other];
      if (other < 0) continue;
      const std::optional<BondOrder> order = host_.bond_between(h, other);
      if (!order || *order != e.order) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (found_.size() >= limit_) return;
    if (depth == order_.size()) {
      found_.push_back(map_);
      return;
    }
    const int p = order_[depth];
    auto attempt = [&](int h) {
      if (!consistent(p, h)) return;
      map_[p] = h;
      used_[h] = true;
      extend(depth + 1);
      used_[h] = false;
      map_[p] = -1;
    };
    if (anchor_[p] >= 0) {
      std::vector<int> candidates;
      for (const Neighbor &nb : host_.neighbors(map_[anchor_[p]])) {
        candidates.push_back(nb.atom);
      }
      const std::vector<int> &rank = host_.canonical_ranks();
      std::sort(candidates.begin(), candidates.end(),
                [&](int a, int b) { return rank[a] < rank[b]; });
      for (int h : candidates) attempt(h);
    } else {
      for (int h : by_rank_) attempt(h);
    }
  }

  const Pattern &pattern_;
  const Molecule &host_;
  std::size_t limit_;
  bool sorted_;
  std::vector<std::vector<PatternEdge>> adj_;
  std::vector<int> by_rank_;
  std::vector<int> order_;
  std::vector<int> anchor_;
  Embedding map_;
  std::vector<bool> used_;
  std::vector<Embedding> found_;
};

}  // namespace

std::vector<Embedding> find_embeddings(const Pattern &pattern,
                                       const Molecule &host,
                                       std::size_t limit) {
  return Matcher(pattern, host, limit, true).run();
}

bool has_embedding(const Pattern &pattern, const Molecule &host) {
  return !Matcher(pattern, host, 1, false).run().empty();
}

}  // namespace roundtrip
