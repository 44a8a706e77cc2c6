//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/network/route.h"
#include "roundtrip/network/route_json.h"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "roundtrip/chem/smiles.h"

namespace roundtrip {

SyntheticRoute make_route(const std::string &target, std::vector<RouteStep> steps) {
  std::map<std::string, int> maker;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    std::sort(steps[s].reactants.begin(), steps[s].reactants.end());
    if (steps[s].reactants.empty()) throw RouteError("step without reactants");
    if (!maker.emplace(steps[s].product, static_cast<int>(s)).second) {
      throw RouteError("molecule made by two steps: " + steps[s].product);
    }
  }
  if (!maker.count(target)) throw RouteError("no step makes the target");

  SyntheticRoute route;
  route.target = target;
  // 0 unvisited, 1 on the current path, 2 done.
  std::map<std::string, int> state;
  std::map<std::string, int> depth;
  std::function<int(const std::string &)> visit = [&](const std::string &m) -> int {
    const auto it = maker.find(m);
    if (it == maker.end()) {
      route.leaves.insert(m);
      return 0;
    }
    int &st = state[m];
    if (st == 1) throw RouteError("cycle through " + m);
    if (st == 2) return depth[m];
    st = 1;
    int d = 0;
    const RouteStep &step = steps[it->second];
    for (const std::string &r : step.reactants) d = std::max(d, visit(r));
    state[m] = 2;
    route.steps.push_back(step);
    if (m != target) route.intermediates.insert(m);
    return depth[m] = d + 1;
  };
  route.depth = visit(target);
  if (route.steps.size() != steps.size()) throw RouteError("step not connected to the target");
  return route;
}

StockSet::StockSet(const std::vector<std::string> &smiles) {
  for (const std::string &s : smiles) insert(s);
}

void StockSet::insert(const std::string &smiles) {
  items_.insert(canonical_smiles(parse_smiles(smiles)));
}

StockSet default_stock(const std::vector<SyntheticRoute> &routes) {
  StockSet stock;
  for (const SyntheticRoute &r : routes) {
    for (const std::string &leaf : r.leaves) stock.insert(leaf);
  }
  return stock;
}

StockSet read_stock(std::istream &in) {
  StockSet stock;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const std::size_t end = line.find_first_of(" \t\r", begin);
    stock.insert(line.substr(begin, end == std::string::npos ? end : end - begin));
  }
  return stock;
}

void write_stock(const StockSet &stock, std::ostream &out) {
  for (const std::string &s : stock.items()) out << s << '\n';
}

std::optional<std::string> validate_route(const SyntheticRoute &route, int max_depth,
                                          const StockSet *stock) {
  SyntheticRoute derived;
  try {
    derived = make_route(route.target, route.steps);
  } catch (const RouteError &e) {
    return std::string(e.what());
  }
  // Application order: products may only be consumed by later steps.
  std::set<std::string> made;
  for (std::size_t s = 0; s < route.steps.size(); ++s) {
    for (const std::string &r : route.steps[s].reactants) {
      if (derived.intermediates.count(r) && !made.count(r)) {
        return "intermediate " + r + " used before it is made";
      }
    }
    made.insert(route.steps[s].product);
  }
  if (route.steps.empty() || route.steps.back().product != route.target) {
    return std::string("last step does not make the target");
  }
  if (route.leaves != derived.leaves) return std::string("leaf set mismatch");
  if (route.intermediates != derived.intermediates) return std::string("intermediate set mismatch");
  if (route.depth != derived.depth) return std::string("depth mismatch");
  if (route.depth > max_depth) return "depth " + std::to_string(route.depth) + " exceeds limit";
  for (const std::string &leaf : route.leaves) {
    if (route.intermediates.count(leaf)) return "leaf is also an intermediate: " + leaf;
    if (stock && !stock->contains(leaf)) return "leaf not in stock: " + leaf;
  }
  return std::nullopt;
}

namespace {

constexpr int kUndecided = -2;
constexpr int kLeaf = -1;

class RouteEnumerator {
public:
  RouteEnumerator(const ReactionNetwork &net, int target, const RouteExtractOptions &options)
      : net_(net), target_(target), options_(options),
        decision_(net.num_molecules(), kUndecided), order_(net.num_molecules()) {}

  std::vector<SyntheticRoute> run() {
    pending_.push_back(target_);
    search();
    return std::move(routes_);
  }

private:
  bool full() const { return options_.budget != 0 && routes_.size() >= options_.budget; }

  bool leaf_allowed(int m) const {
    if (m == target_) return false;
    return net_.producers(m).empty() ||
           (options_.stock != nullptr && options_.stock->contains(net_.smiles(m)));
  }

  const std::vector<int> &ordered_producers(int m) {
    std::vector<int> &order = order_[m];
    if (order.empty() && !net_.producers(m).empty()) {
      order = net_.producers(m);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto &x = net_.reaction(a);
        const auto &y = net_.reaction(b);
        if (x.count != y.count) return x.count > y.count;
        return x.key < y.key;
      });
    }
    return order;
  }

  // True when `to` can be reached from `from` through decided reactions.
  bool reaches(int from, int to) const {
    std::vector<int> stack = {from};
    std::vector<bool> seen(net_.num_molecules(), false);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      if (seen[v] || decision_[v] < 0) continue;
      seen[v] = true;
      for (int r : net_.reaction(decision_[v]).reactants) stack.push_back(r);
    }
    return false;
  }

  void search() {
    if (full()) return;
    if (pending_.empty()) {
      emit();
      return;
    }
    const int m = pending_.back();
    pending_.pop_back();
    if (decision_[m] != kUndecided) {
      search();
    } else {
      if (leaf_allowed(m)) {
        decision_[m] = kLeaf;
        search();
      }
      for (int r : ordered_producers(m)) {
        if (full()) break;
        const std::vector<int> &reactants = net_.reaction(r).reactants;
        decision_[m] = r;
        const bool cyclic = std::any_of(reactants.begin(), reactants.end(), [&](int x) {
          return x == m || reaches(x, m);
        });
        if (!cyclic) {
          // Reverse so the first reactant is expanded first.
          pending_.insert(pending_.end(), reactants.rbegin(), reactants.rend());
          search();
          pending_.resize(pending_.size() - reactants.size());
        }
      }
      decision_[m] = kUndecided;
    }
    pending_.push_back(m);
  }

  void emit() {
    std::vector<int> used;
    std::vector<RouteStep> steps;
    for (int m = 0; m < net_.num_molecules(); ++m) {
      if (decision_[m] < 0) continue;
      const auto &node = net_.reaction(decision_[m]);
      RouteStep step{net_.smiles(m), {}};
      for (int r : node.reactants) step.reactants.push_back(net_.smiles(r));
      steps.push_back(std::move(step));
    }
    SyntheticRoute route;
    try {
      route = make_route(net_.smiles(target_), std::move(steps));
    } catch (const RouteError &) {
      return;
    }
    if (route.depth > options_.max_depth) return;
    routes_.push_back(std::move(route));
  }

  const ReactionNetwork &net_;
  int target_;
  RouteExtractOptions options_;
  std::vector<int> decision_;
  std::vector<std::vector<int>> order_;
  std::vector<int> pending_;
  std::vector<SyntheticRoute> routes_;
};

}  // namespace

std::vector<SyntheticRoute> extract_routes(const ReactionNetwork &net, const std::string &target,
                                           const RouteExtractOptions &options) {
  const int t = net.find(target);
  if (t < 0) throw std::invalid_argument("target not in network: " + target);
  if (net.producers(t).empty()) return {};
  return RouteEnumerator(net, t, options).run();
}

nlohmann::ordered_json route_to_json(const SyntheticRoute &r) {
  nlohmann::ordered_json j;
  j["target"] = r.target;
  j["steps"] = nlohmann::ordered_json::array();
  for (const RouteStep &s : r.steps) {
    j["steps"].push_back({{"product", s.product}, {"reactants", s.reactants}});
  }
  j["leaves"] = r.leaves;
  j["depth"] = r.depth;
  if (r.confidence) j["confidence"] = *r.confidence;
  return j;
}

SyntheticRoute route_from_json(const nlohmann::json &j) {
  std::vector<RouteStep> steps;
  for (const auto &s : j.at("steps")) {
    steps.push_back({s.at("product").get<std::string>(),
                     s.at("reactants").get<std::vector<std::string>>()});
  }
  SyntheticRoute r = make_route(j.at("target").get<std::string>(), std::move(steps));
  if (j.contains("depth") && j["depth"].get<int>() != r.depth) {
    throw RouteError("stored depth disagrees with steps");
  }
  if (j.contains("confidence")) r.confidence = j["confidence"].get<double>();
  return r;
}

void write_routes_jsonl(const std::vector<TargetRoutes> &entries, std::ostream &out) {
  for (const TargetRoutes &e : entries) {
    nlohmann::ordered_json j;
    j["target"] = e.target;
    j["routes"] = nlohmann::ordered_json::array();
    for (const SyntheticRoute &r : e.routes) j["routes"].push_back(route_to_json(r));
    out << j.dump() << '\n';
  }
}

std::vector<TargetRoutes> read_routes_jsonl(std::istream &in) {
  std::vector<TargetRoutes> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      TargetRoutes e{j.at("target").get<std::string>(), {}};
      for (const auto &r : j.at("routes")) {
        e.routes.push_back(route_from_json(r));
        if (e.routes.back().target != e.target) throw RouteError("route target mismatch");
      }
      out.push_back(std::move(e));
    } catch (const std::exception &e) {
      throw std::runtime_error("routes line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace roundtrip
