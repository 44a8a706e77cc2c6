//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/network/network.h"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "roundtrip/network/route.h"
#include "roundtrip/network/split.h"
#include "support/brute_routes.h"
#include "support/synth.h"

namespace roundtrip {
namespace {

using testing::StepSet;

// Molecule "name" i is the linear alkane with i + 1 carbons.
std::string mol(int i) { return std::string(i + 1, 'C'); }

Reaction rxn(const std::vector<int> &reactants, int product, int count = 1) {
  std::string line;
  for (int r : reactants) line += (line.empty() ? "" : ".") + mol(r);
  Reaction r = parse_reaction_smiles(line + ">>" + mol(product));
  r.count = count;
  return r;
}

ReactionNetwork network_of(std::vector<Reaction> reactions) {
  return build_network(deduplicate(std::move(reactions)));
}

TEST(NetworkTest, SingleReaction) {
  const ReactionNetwork net = network_of({rxn({0, 1}, 2)});
  EXPECT_EQ(net.num_molecules(), 3);
  EXPECT_EQ(net.num_reactions(), 1);
  EXPECT_EQ(net.out_degree(net.find(mol(0))), 1);
  EXPECT_EQ(net.out_degree(net.find(mol(1))), 1);
  EXPECT_EQ(net.out_degree(net.find(mol(2))), 0);
  EXPECT_EQ(net.num_edges(), 3);
  EXPECT_EQ(net.find("N"), -1);
  EXPECT_EQ(find_targets(net), std::vector<std::string>{mol(2)});
}

TEST(NetworkTest, ChainAndDisconnected) {
  const ReactionNetwork chain = network_of({rxn({0}, 1), rxn({1}, 2)});
  EXPECT_EQ(find_targets(chain), std::vector<std::string>{mol(2)});
  const ReactionNetwork two = network_of({rxn({0}, 1), rxn({2}, 3)});
  EXPECT_EQ(find_targets(two).size(), 2u);
}

TEST(NetworkTest, CountsMatchSetRecount) {
  const testing::SynthCorpus corpus = testing::generate_corpus({.reactions = 1000, .seed = 12});
  const ReactionDataset ds = deduplicate(corpus.reactions);
  ASSERT_EQ(ds.size(), 1000u);
  const ReactionNetwork net = build_network(ds);

  std::set<std::string> molecules;
  std::set<std::string> consumed;
  std::set<std::string> produced;
  int edges = 0;
  for (const Reaction &r : ds.reactions()) {
    const std::vector<std::string> names = r.reactant_smiles();
    const std::set<std::string> rs(names.begin(), names.end());
    molecules.insert(rs.begin(), rs.end());
    consumed.insert(rs.begin(), rs.end());
    molecules.insert(r.product.canonical_smiles());
    produced.insert(r.product.canonical_smiles());
    edges += static_cast<int>(rs.size()) + 1;
  }
  EXPECT_EQ(net.num_molecules(), static_cast<int>(molecules.size()));
  EXPECT_EQ(net.num_reactions(), 1000);
  EXPECT_EQ(net.num_edges(), edges);

  std::vector<std::string> scan;
  for (const std::string &m : molecules) {
    if (!consumed.count(m) && produced.count(m)) scan.push_back(m);
  }
  const std::vector<std::string> targets = find_targets(net);
  EXPECT_EQ(targets, scan);
  // The generator makes one target per chain.
  EXPECT_EQ(targets.size(), corpus.routes.size());
  for (const std::string &t : targets) EXPECT_FALSE(consumed.count(t));

  for (int m = 0; m < net.num_molecules(); ++m) {
    for (int r : net.consumers(m)) {
      const auto &rs = net.reaction(r).reactants;
      EXPECT_NE(std::find(rs.begin(), rs.end(), m), rs.end());
    }
    for (int r : net.producers(m)) EXPECT_EQ(net.reaction(r).product, m);
  }
}

TEST(RouteTest, Diamond) {
  // A -> B, A -> C, B + C -> D
  const ReactionNetwork net = network_of({rxn({0}, 1), rxn({0}, 2), rxn({1, 2}, 3)});
  EXPECT_EQ(find_targets(net), std::vector<std::string>{mol(3)});
  const std::vector<SyntheticRoute> routes = extract_routes(net, mol(3));
  ASSERT_EQ(routes.size(), 1u);
  EXPECT_EQ(routes[0].leaves, std::set<std::string>{mol(0)});
  EXPECT_EQ(routes[0].intermediates, (std::set<std::string>{mol(1), mol(2)}));
  EXPECT_EQ(routes[0].depth, 2);
  EXPECT_EQ(routes[0].steps.back().product, mol(3));
  EXPECT_EQ(validate_route(routes[0]), std::nullopt);
}

TEST(RouteTest, AlternativeReactions) {
  const ReactionNetwork net = network_of({rxn({0}, 3), rxn({1, 2}, 3, 4)});
  const std::vector<SyntheticRoute> routes = extract_routes(net, mol(3));
  ASSERT_EQ(routes.size(), 2u);
  // Higher record count first.
  EXPECT_EQ(routes[0].leaves, (std::set<std::string>{mol(1), mol(2)}));
  EXPECT_EQ(routes[1].leaves, std::set<std::string>{mol(0)});
  EXPECT_THROW(extract_routes(net, "N"), std::invalid_argument);
}

TEST(RouteTest, StockAllowsEarlyStop) {
  // 0 -> 1 -> 2; with 1 in stock the route may stop at 1.
  const ReactionNetwork net = network_of({rxn({0}, 1), rxn({1}, 2)});
  EXPECT_EQ(extract_routes(net, mol(2)).size(), 1u);
  const StockSet stock({mol(1)});
  const std::vector<SyntheticRoute> routes = extract_routes(net, mol(2), {.stock = &stock});
  ASSERT_EQ(routes.size(), 2u);
  EXPECT_EQ(routes[0].leaves, std::set<std::string>{mol(1)});
  EXPECT_EQ(routes[0].depth, 1);
  EXPECT_EQ(routes[1].depth, 2);
}

TEST(RouteTest, CyclesAndDepth) {
  // 0 -> 1, 1 -> 2, 2 -> 1, 2 -> 3
  const ReactionNetwork net = network_of({rxn({0}, 1), rxn({1}, 2), rxn({2}, 1), rxn({2}, 3)});
  const std::vector<SyntheticRoute> routes = extract_routes(net, mol(3));
  ASSERT_EQ(routes.size(), 1u);
  EXPECT_EQ(routes[0].depth, 3);
  EXPECT_TRUE(extract_routes(net, mol(3), {.max_depth = 2}).empty());
}

TEST(RouteTest, MakeRouteRejectsBadShapes) {
  EXPECT_THROW(make_route("CC", {{"CC", {"C"}}, {"CC", {"CCC"}}}), RouteError);
  EXPECT_THROW(make_route("CC", {{"CCC", {"C"}}}), RouteError);
  EXPECT_THROW(make_route("CC", {{"CC", {"CCC"}}, {"CCC", {"CC"}}}), RouteError);
  EXPECT_THROW(make_route("CC", {{"CC", {"C"}}, {"CCCC", {"C"}}}), RouteError);
  SyntheticRoute r = make_route("CCC", {{"CCC", {"CC"}}, {"CC", {"C"}}});
  EXPECT_EQ(r.steps.front().product, "CC");
  EXPECT_EQ(validate_route(r), std::nullopt);
  EXPECT_TRUE(validate_route(r, 1).has_value());
  const StockSet stock({"N"});
  EXPECT_TRUE(validate_route(r, 15, &stock).has_value());
  std::swap(r.steps[0], r.steps[1]);
  EXPECT_TRUE(validate_route(r).has_value());
}

TEST(RouteTest, MatchesBruteForceOnRandomNetworks) {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ReactionNetwork net = network_of(testing::alkane_network(rng, 120 + rng() % 80));
    StockSet stock;
    for (int m = 0; m < net.num_molecules(); ++m) {
      if (rng() % 4 == 0) stock.insert(net.smiles(m));
    }
    for (const std::string &t : find_targets(net)) {
      for (const StockSet *s : std::vector<const StockSet *>{nullptr, &stock}) {
        const int max_depth = s ? 3 : 15;
        const std::vector<SyntheticRoute> routes =
            extract_routes(net, t, {.max_depth = max_depth, .budget = 0, .stock = s});
        std::set<StepSet> got;
        for (const SyntheticRoute &r : routes) {
          EXPECT_EQ(validate_route(r, max_depth), std::nullopt);
          got.insert(StepSet(r.steps.begin(), r.steps.end()));
        }
        EXPECT_EQ(got.size(), routes.size());
        EXPECT_EQ(got, testing::brute_force_routes(net, net.find(t), max_depth, s));
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(RouteTest, BudgetTakesPrefix) {
  std::mt19937_64 rng(5);
  const ReactionNetwork net = network_of(testing::alkane_network(rng, 200));
  for (const std::string &t : find_targets(net)) {
    const auto all = extract_routes(net, t, {.budget = 0});
    const auto some = extract_routes(net, t, {.budget = 2});
    ASSERT_EQ(some.size(), std::min<std::size_t>(2, all.size()));
    for (std::size_t k = 0; k < some.size(); ++k) EXPECT_EQ(some[k].steps, all[k].steps);
  }
}

TEST(RouteTest, GeneratedRoutesAreExtracted) {
  const testing::SynthCorpus corpus = testing::generate_corpus({.reactions = 200, .seed = 8});
  const ReactionNetwork net = build_network(deduplicate(corpus.reactions));
  for (const testing::GeneratedRoute &g : corpus.routes) {
    const auto routes = extract_routes(net, g.target);
    ASSERT_FALSE(routes.empty());
    EXPECT_EQ(routes[0].leaves, g.leaves);
    EXPECT_EQ(routes[0].depth, g.depth());
  }
}

TEST(StockTest, DefaultStockIsLeafUnion) {
  const testing::SynthCorpus corpus = testing::generate_corpus({.reactions = 300, .seed = 6});
  const ReactionNetwork net = build_network(deduplicate(corpus.reactions));
  std::vector<SyntheticRoute> routes;
  std::set<std::string> oracle;
  for (const std::string &t : find_targets(net)) {
    for (SyntheticRoute &r : extract_routes(net, t)) {
      for (const RouteStep &s : r.steps) {
        for (const std::string &x : s.reactants) {
          bool made = false;
          for (const RouteStep &o : r.steps) made |= o.product == x;
          if (!made) oracle.insert(x);
        }
      }
      routes.push_back(std::move(r));
    }
  }
  EXPECT_EQ(default_stock(routes).items(), oracle);
  EXPECT_EQ(oracle, corpus.stock);
}

TEST(StockTest, FileRoundTripAndCanonicalization) {
  std::stringstream in("# purchasable\nOCC\n\n  c1ccccc1  extra\nCCO\n");
  const StockSet stock = read_stock(in);
  EXPECT_EQ(stock.size(), 2u);
  EXPECT_TRUE(stock.contains("CCO"));
  EXPECT_TRUE(stock.contains("c1ccccc1"));
  std::stringstream out;
  write_stock(stock, out);
  EXPECT_EQ(read_stock(out).items(), stock.items());
  std::stringstream bad("C(C\n");
  EXPECT_ANY_THROW(read_stock(bad));
}

TEST(RoutesJsonTest, RoundTrip) {
  const ReactionNetwork net = network_of({rxn({0}, 1), rxn({0}, 2), rxn({1, 2}, 3), rxn({4}, 3)});
  TargetRoutes entry{mol(3), extract_routes(net, mol(3))};
  entry.routes[0].confidence = 0.5;
  std::stringstream buf;
  write_routes_jsonl({entry}, buf);
  const std::vector<TargetRoutes> back = read_routes_jsonl(buf);
  ASSERT_EQ(back.size(), 1u);
  ASSERT_EQ(back[0].routes.size(), entry.routes.size());
  for (std::size_t k = 0; k < entry.routes.size(); ++k) {
    EXPECT_EQ(back[0].routes[k].steps, entry.routes[k].steps);
    EXPECT_EQ(back[0].routes[k].leaves, entry.routes[k].leaves);
    EXPECT_EQ(back[0].routes[k].confidence, entry.routes[k].confidence);
  }
  std::stringstream bad(R"({"target":"CC","routes":[{"target":"CC","steps":[{"product":"CC","reactants":["CC"]}]}]})");
  EXPECT_THROW(read_routes_jsonl(bad), std::runtime_error);
}

TEST(SplitTest, Sizes) {
  const SplitCounts c = split_counts(100, {});
  EXPECT_EQ(c.train, 98u);
  EXPECT_EQ(c.validation, 1u);
  EXPECT_EQ(c.test, 1u);
  EXPECT_THROW(split_counts(100, {90, 5, 4}), std::invalid_argument);
  EXPECT_THROW(split_counts(2, {}), std::invalid_argument);
  EXPECT_NO_THROW(split_counts(3, {}));
}

TEST(SplitTest, LargeCorpusCounts) {
  std::vector<int> targets(107354);
  for (int i = 0; i < 107354; ++i) targets[i] = i;
  const auto split = split_dataset(targets, SplitCounts{105218, 1068, 1068}, 7);
  EXPECT_EQ(split.train.size(), 105218u);
  EXPECT_EQ(split.validation.size(), 1068u);
  EXPECT_EQ(split.test.size(), 1068u);
  std::set<int> all(split.train.begin(), split.train.end());
  all.insert(split.validation.begin(), split.validation.end());
  all.insert(split.test.begin(), split.test.end());
  EXPECT_EQ(all.size(), 107354u);
  // Percentages alone round to 1074 per held-out bucket at this size.
  EXPECT_EQ(split_counts(107354, {}).validation, 1074u);
}

TEST(SplitTest, SeedDeterminism) {
  std::vector<std::string> items;
  for (int i = 0; i < 500; ++i) items.push_back(mol(i % 40) + std::to_string(i));
  const auto a = split_dataset(items, SplitRatios{80, 10, 10}, 11);
  const auto b = split_dataset(items, SplitRatios{80, 10, 10}, 11);
  const auto c = split_dataset(items, SplitRatios{80, 10, 10}, 12);
  EXPECT_EQ(a.test, b.test);
  EXPECT_EQ(a.validation, b.validation);
  EXPECT_NE(a.test, c.test);
  EXPECT_EQ(a.train.size(), 400u);
}

}  // namespace
}  // namespace roundtrip
