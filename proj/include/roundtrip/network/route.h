//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_NETWORK_ROUTE_H_
#define ROUNDTRIP_NETWORK_ROUTE_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "roundtrip/network/network.h"

namespace roundtrip {

// All molecules are canonical SMILES.
struct RouteStep {
  std::string product;
  // Sorted.
  std::vector<std::string> reactants;

  bool operator==(const RouteStep &) const = default;
  auto operator<=>(const RouteStep &) const = default;
};

struct SyntheticRoute {
  std::string target;
  // Application order: every step's product is consumed by a later step,
  // and the last step makes the target.
  std::vector<RouteStep> steps;
  std::set<std::string> intermediates;
  std::set<std::string> leaves;
  // Reactions on the longest chain from a leaf to the target.
  int depth = 0;
  std::optional<double> confidence;
};

class RouteError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Orders the steps, derives leaves, intermediates and depth. Throws
// RouteError when a molecule is made by two steps, the steps contain a cycle,
// or some step does not lead to the target.
SyntheticRoute make_route(const std::string &target, std::vector<RouteStep> steps);

class StockSet {
public:
  StockSet() = default;
  // Entries are canonicalized; throws ParseError on bad SMILES.
  explicit StockSet(const std::vector<std::string> &smiles);

  bool contains(const std::string &canonical) const { return items_.count(canonical) > 0; }
  void insert(const std::string &smiles);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::set<std::string> &items() const { return items_; }

private:
  std::set<std::string> items_;
};

// Union of route leaves.
StockSet default_stock(const std::vector<SyntheticRoute> &routes);
// One SMILES per line; blank lines and '#' comments skipped.
StockSet read_stock(std::istream &in);
void write_stock(const StockSet &stock, std::ostream &out);

// Empty when the route is consistent: steps in application order, derived
// sets and depth as make_route computes them, depth <= max_depth, and leaves
// in stock when a stock is given. Otherwise a description of the problem.
std::optional<std::string> validate_route(const SyntheticRoute &route, int max_depth = 15,
                                          const StockSet *stock = nullptr);

struct RouteExtractOptions {
  int max_depth = 15;
  // Maximum routes per target; 0 means unlimited.
  std::size_t budget = 64;
  // When set, molecules in stock may end a branch even if some reaction
  // makes them.
  const StockSet *stock = nullptr;
};

// Every distinct route to `target`. A route fixes one choice per molecule:
// either it is a leaf (allowed when nothing in the network makes it, or it is
// in the stock) or it is made by one of its producing reactions. The target
// is always made by a reaction. Routes with a cycle or deeper than max_depth
// are discarded. Choices are explored leaf first, then by producing reaction
// in order of record count (descending) and reaction key. Throws
// std::invalid_argument when the target is not in the network.
std::vector<SyntheticRoute> extract_routes(const ReactionNetwork &net, const std::string &target,
                                           const RouteExtractOptions &options = {});

struct TargetRoutes {
  std::string target;
  std::vector<SyntheticRoute> routes;
};

// One JSON object per target: {target, routes: [{target, steps: [{product,
// reactants}], leaves, depth, confidence?}]}.
void write_routes_jsonl(const std::vector<TargetRoutes> &entries, std::ostream &out);
// Throws std::runtime_error on malformed records or routes that fail
// make_route.
std::vector<TargetRoutes> read_routes_jsonl(std::istream &in);

}  // namespace roundtrip

#endif  // ROUNDTRIP_NETWORK_ROUTE_H_
