//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/planner/planner.h"

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "roundtrip/chem/smiles.h"
#include "roundtrip/templates/extract.h"
#include "support/synth.h"

namespace roundtrip {
namespace {

Prediction pred(std::vector<std::string> smiles, double score) {
  Prediction p;
  for (const std::string &s : smiles) p.molecules.push_back(parse_smiles(s));
  std::sort(p.molecules.begin(), p.molecules.end(), [](const Molecule &a, const Molecule &b) {
    return a.canonical_smiles() < b.canonical_smiles();
  });
  p.score = score;
  return p;
}

// Lookup-table model keyed by canonical SMILES.
RetroModel table_model(std::map<std::string, std::vector<Prediction>> table, int *calls = nullptr) {
  return [table = std::move(table), calls](const Molecule &m, int k) {
    if (calls) ++*calls;
    const auto it = table.find(m.canonical_smiles());
    if (it == table.end()) return std::vector<Prediction>{};
    std::vector<Prediction> out = it->second;
    if (static_cast<int>(out.size()) > k) out.resize(k);
    return out;
  };
}

std::string canon(const std::string &s) { return parse_smiles(s).canonical_smiles(); }

TEST(PlannerTest, OneStepToStock) {
  PlannerConfig cfg;
  cfg.stock = StockSet({"CC(=O)O", "CCO"});
  const RetroModel model = table_model({{canon("CCOC(C)=O"), {pred({"CC(=O)O", "CCO"}, 1.0)}}});
  PlanTrace trace;
  const auto routes = plan(parse_smiles("CCOC(C)=O"), cfg, model, &trace);
  ASSERT_EQ(routes.size(), 1u);
  EXPECT_EQ(routes[0].depth, 1);
  EXPECT_EQ(routes[0].leaves, (std::set<std::string>{canon("CC(=O)O"), canon("CCO")}));
  EXPECT_DOUBLE_EQ(*routes[0].confidence, 1.0);
  EXPECT_EQ(count_calls(trace), 1);
}

TEST(PlannerTest, DeadEnd) {
  PlanTrace trace;
  EXPECT_TRUE(plan(parse_smiles("CCO"), {}, table_model({}), &trace).empty());
  EXPECT_EQ(count_calls(trace), 1);
}

TEST(PlannerTest, ConfigValidation) {
  PlannerConfig c;
  c.beam_width = 0;
  EXPECT_THROW(validate_config(c), std::invalid_argument);
  c = {};
  c.max_depth = 16;
  EXPECT_THROW(validate_config(c), std::invalid_argument);
  c = {};
  c.call_budget = 0;
  EXPECT_THROW(validate_config(c), std::invalid_argument);
  EXPECT_NO_THROW(validate_config({}));
}

TEST(PlannerTest, RanksByProductOfStepScores) {
  // T -> A + B (0.6) or T -> C (0.4); A -> S1 (0.5); B, C, S1 in stock.
  PlannerConfig cfg;
  cfg.stock = StockSet({"CCCl", "CCBr", "CCN"});
  const RetroModel model = table_model({
      {canon("CCCCCC"), {pred({"CCCC", "CCBr"}, 0.6), pred({"CCN"}, 0.4)}},
      {canon("CCCC"), {pred({"CCCl"}, 0.5)}},
  });
  const auto routes = plan(parse_smiles("CCCCCC"), cfg, model);
  ASSERT_EQ(routes.size(), 2u);
  EXPECT_NEAR(*routes[0].confidence, 0.4, 1e-12);
  EXPECT_EQ(routes[0].depth, 1);
  EXPECT_NEAR(*routes[1].confidence, 0.3, 1e-12);
  EXPECT_EQ(routes[1].depth, 2);
  EXPECT_EQ(routes[1].intermediates, std::set<std::string>{"CCCC"});
}

TEST(PlannerTest, CyclesAreRejected) {
  PlannerConfig cfg;
  cfg.stock = StockSet({"N"});
  int calls = 0;
  const RetroModel model = table_model({
      {canon("CCO"), {pred({"CCN"}, 0.9)}},
      {canon("CCN"), {pred({"CCO"}, 0.9), pred({"CC"}, 0.1)}},
      {canon("CC"), {pred({"N"}, 1.0)}},
  }, &calls);
  PlanTrace trace;
  const auto routes = plan(parse_smiles("CCO"), cfg, model, &trace);
  ASSERT_EQ(routes.size(), 1u);
  EXPECT_EQ(routes[0].depth, 3);
  EXPECT_EQ(count_calls(trace), calls);
}

TEST(PlannerTest, DepthLimit) {
  // Linear chain of 4 steps down to methane.
  PlannerConfig cfg;
  cfg.stock = StockSet({"C"});
  std::map<std::string, std::vector<Prediction>> table;
  for (int n = 2; n <= 5; ++n) table[std::string(n, 'C')] = {pred({std::string(n - 1, 'C')}, 1.0)};
  EXPECT_EQ(plan(parse_smiles("CCCCC"), cfg, table_model(table)).size(), 1u);
  cfg.max_depth = 3;
  PlanTrace trace;
  EXPECT_TRUE(plan(parse_smiles("CCCCC"), cfg, table_model(table), &trace).empty());
  EXPECT_EQ(count_calls(trace), 3);
}

// Fresh molecules S-x-P where x spells an index in C/N/O; always one atom
// smaller than the input, so largest-first expansion walks level by level.
RetroModel fresh_model(int *counter) {
  return [counter](const Molecule &m, int) {
    const int len = m.heavy_atom_count() - 1;
    std::vector<Prediction> out;
    for (int p = 0; p < 2; ++p) {
      std::vector<std::string> smiles;
      for (int r = 0; r < 2; ++r) {
        int code = (*counter)++;
        std::string body;
        for (int i = 0; i < len - 2; ++i, code /= 3) body += "CNO"[code % 3];
        smiles.push_back("S" + body + "P");
      }
      out.push_back(pred(smiles, 0.5));
    }
    return out;
  };
}

TEST(PlannerTest, BudgetExhaustionStopsAtExactlyTheBudget) {
  int counter = 0;
  PlanTrace trace;
  const auto routes = plan(parse_smiles("S" + std::string(24, 'C') + "P"), {}, fresh_model(&counter), &trace);
  EXPECT_TRUE(routes.empty());
  EXPECT_EQ(count_calls(trace), 500);
  EXPECT_TRUE(trace.budget_exhausted);

  counter = 0;
  PlannerConfig small;
  small.call_budget = 37;
  plan(parse_smiles("S" + std::string(24, 'C') + "P"), small, fresh_model(&counter), &trace);
  EXPECT_EQ(count_calls(trace), 37);
}

class ClosedWorldTest: public ::testing::TestWithParam<unsigned> {};

TEST_P(ClosedWorldTest, FindsRoutesFromStock) {
  const testing::SynthCorpus corpus = testing::generate_corpus({.reactions = 200, .seed = GetParam()});
  const TemplateSet set = extract_templates(deduplicate(corpus.reactions));
  const RetroLibrary lib(set.retro);
  PlannerConfig cfg;
  cfg.stock = StockSet(std::vector<std::string>(corpus.stock.begin(), corpus.stock.end()));

  int found = 0;
  for (const testing::GeneratedRoute &ref : corpus.routes) {
    PlanTrace trace;
    const auto routes = plan(parse_smiles(ref.target), cfg, lib, &trace);
    EXPECT_LE(count_calls(trace), cfg.call_budget);
    EXPECT_LE(routes.size(), 5u);
    if (!routes.empty()) ++found;
    for (std::size_t k = 0; k < routes.size(); ++k) {
      EXPECT_EQ(validate_route(routes[k], cfg.max_depth, &cfg.stock), std::nullopt);
      for (const std::string &leaf : routes[k].leaves) EXPECT_TRUE(cfg.stock.contains(leaf));
      if (k > 0) {
        EXPECT_LE(*routes[k].confidence, *routes[k - 1].confidence);
      }
      // Every step must be something the library proposes.
      for (const RouteStep &step : routes[k].steps) {
        bool proposed = false;
        for (const Prediction &p : predict_retro_topk(parse_smiles(step.product), 5, lib)) {
          std::vector<std::string> rs;
          for (const Molecule &m : p.molecules) rs.push_back(m.canonical_smiles());
          proposed |= rs == step.reactants;
        }
        EXPECT_TRUE(proposed) << step.product;
      }
    }
  }
  EXPECT_GE(found, static_cast<int>(std::ceil(0.95 * corpus.routes.size())));
}

TEST_P(ClosedWorldTest, Deterministic) {
  const testing::SynthCorpus corpus = testing::generate_corpus({.reactions = 80, .seed = GetParam()});
  const RetroLibrary lib(extract_templates(deduplicate(corpus.reactions)).retro);
  PlannerConfig cfg;
  cfg.stock = StockSet(std::vector<std::string>(corpus.stock.begin(), corpus.stock.end()));
  for (const testing::GeneratedRoute &ref : corpus.routes) {
    const auto a = plan(parse_smiles(ref.target), cfg, lib);
    const auto b = plan(parse_smiles(ref.target), cfg, lib);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].steps, b[k].steps);
      EXPECT_EQ(a[k].confidence, b[k].confidence);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ClosedWorldTest, ::testing::Values(1u, 4u, 9u));

}  // namespace
}  // namespace roundtrip
