//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/chem/canon.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace roundtrip {
namespace {

struct Arc {
  int to;
  int label;
};

class Canonicalizer {
public:
  explicit Canonicalizer(const ColoredGraph &graph)
      : graph_(graph), n_(static_cast<int>(graph.colors.size())), adj_(n_) {
    for (const ColoredEdge &e : graph.edges) {
      adj_[e.u].push_back({e.v, e.label});
      adj_[e.v].push_back({e.u, e.label});
    }
  }

  CanonicalLabeling run() {
    CanonicalLabeling result;
    if (n_ == 0) return result;

    std::vector<int> cls(n_);
    {
      std::vector<std::uint64_t> sorted = graph_.colors;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < n_; ++v) {
        cls[v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), graph_.colors[v]) -
            sorted.begin());
      }
    }
    refine(cls);
    std::vector<int> path;
    search(cls, path);

    result.rank = std::move(best_rank_);
    result.certificate = std::move(best_cert_);
    return result;
  }

private:
  // Classes are dense ordinals; vertices in the same class are not yet
  // distinguished. Refinement splits classes by the multiset of
  // (edge label, neighbor class) until the partition is stable.
  void refine(std::vector<int> &cls) const {
    int num_classes = count_classes(cls);
    std::vector<std::vector<std::pair<int, int>>> sig(n_);
    std::vector<int> order(n_);
    while (num_classes < n_) {
      for (int v = 0; v < n_; ++v) {
        sig[v].clear();
        for (const Arc &a : adj_[v]) sig[v].emplace_back(a.label, cls[a.to]);
        std::sort(sig[v].begin(), sig[v].end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cls[a] != cls[b]) return cls[a] < cls[b];
        return sig[a] < sig[b];
      });
      std::vector<int> next(n_);
      int c = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0) {
          const int a = order[i - 1], b = order[i];
          if (cls[a] != cls[b] || sig[a] != sig[b]) ++c;
        }
        next[order[i]] = c;
      }
      const int refined = c + 1;
      cls = std::move(next);
      if (refined == num_classes) break;
      num_classes = refined;
    }
  }

  static int count_classes(const std::vector<int> &cls) {
    int m = 0;
    for (int c : cls) m = std::max(m, c + 1);
    return m;
  }

  std::vector<std::uint64_t> certificate(const std::vector<int> &rank) const {
    std::vector<std::uint64_t> cert;
    cert.reserve(n_ + graph_.edges.size() + 1);
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[rank[v]] = v;
    for (int i = 0; i < n_; ++i) cert.push_back(graph_.colors[inv[i]]);
    cert.push_back(~std::uint64_t{0});
    std::vector<std::uint64_t> es;
    es.reserve(graph_.edges.size());
    for (const ColoredEdge &e : graph_.edges) {
      std::uint64_t a = rank[e.u], b = rank[e.v];
      if (a > b) std::swap(a, b);
      es.push_back((a << 40) | (b << 16) |
                   static_cast<std::uint64_t>(e.label & 0xffff));
    }
    std::sort(es.begin(), es.end());
    cert.insert(cert.end(), es.begin(), es.end());
    return cert;
  }

  bool fixes_path(const std::vector<int> &perm,
                  const std::vector<int> &path) const {
    for (int v : path) {
      if (perm[v] != v) return false;
    }
    return true;
  }

  void search(std::vector<int> cls, std::vector<int> &path) {
    // Target cell: the lowest class with more than one member.
    std::vector<int> size(n_, 0);
    for (int c : cls) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      visit_leaf(cls);
      return;
    }

    std::vector<int> cell;
    for (int v = 0; v < n_; ++v) {
      if (cls[v] == target) cell.push_back(v);
    }

    std::vector<int> explored;
    for (int v : cell) {
      if (in_explored_orbit(v, explored, path)) continue;
      explored.push_back(v);

      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) {
        // Individualized vertex keeps the cell's ordinal; every class from
        // the remainder of the cell upward shifts by one.
        if (cls[u] > target || (cls[u] == target && u != v)) {
          child[u] = cls[u] + 1;
        } else {
          child[u] = cls[u];
        }
      }
      refine(child);
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
    }
  }

  bool in_explored_orbit(int v, const std::vector<int> &explored,
                         const std::vector<int> &path) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    // Orbits of the pointwise stabilizer of the current path, restricted to
    // the automorphisms found so far.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const std::vector<int> &perm : automorphisms_) {
      if (!fixes_path(perm, path)) continue;
      for (int u = 0; u < n_; ++u) {
        const int a = find(u), b = find(perm[u]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(v);
    for (int e : explored) {
      if (find(e) == root) return true;
    }
    return false;
  }

  void visit_leaf(const std::vector<int> &rank) {
    std::vector<std::uint64_t> cert = certificate(rank);
    if (best_rank_.empty()) {
      best_rank_ = rank;
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == best_cert_) {
      // Same certificate: the two orderings differ by an automorphism.
      std::vector<int> inv_best(n_);
      for (int v = 0; v < n_; ++v) inv_best[best_rank_[v]] = v;
      std::vector<int> perm(n_);
      for (int v = 0; v < n_; ++v) perm[v] = inv_best[rank[v]];
      automorphisms_.push_back(std::move(perm));
      return;
    }
    if (cert < best_cert_) {
      best_rank_ = rank;
      best_cert_ = std::move(cert);
    }
  }

  const ColoredGraph &graph_;
  int n_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<int> best_rank_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredGraph &graph) {
  return Canonicalizer(graph).run();
}

}  // namespace roundtrip
