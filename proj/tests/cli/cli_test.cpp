//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "roundtrip/cli/commands.h"
#include "roundtrip/cli/config.h"
#include "roundtrip/cli/parallel.h"
#include "roundtrip/metrics/metrics.h"
#include "roundtrip/metrics/report.h"
#include "roundtrip/reaction/reaction.h"
#include "support/synth.h"

namespace roundtrip::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("roundtrip_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  std::string write(const std::string &name, const std::string &text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  int run(std::vector<std::string> args) {
    std::ostringstream out;
    err_.str("");
    return run_cli(args, out, err_);
  }

  static std::string slurp(const std::string &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static json load_json(const std::string &p) { return json::parse(slurp(p)); }

  static std::size_t lines(const std::string &p) {
    std::ifstream in(p);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += !line.empty();
    return n;
  }

  static std::vector<EvalRecord> records(const std::string &p) {
    std::ifstream in(p);
    return read_eval_records_jsonl(in);
  }

  // ingest -> build -> fit on a generated closed world.
  void pipeline(std::uint64_t seed, int reactions = 200) {
    testing::SynthOptions o;
    o.reactions = reactions;
    o.rules = testing::chemoselective_rules();
    o.seed = seed;
    corpus_ = testing::generate_corpus(o);
    std::string text;
    for (const std::string &l : corpus_.lines) text += l + "\n";
    const std::string rxn = write("reactions.smi", text);
    ASSERT_EQ(run({"ingest", rxn, "--out", path("ingest")}), 0) << err_.str();
    ASSERT_EQ(run({"build", path("ingest/dataset.jsonl"), "--out", path("build")}), 0) << err_.str();
    ASSERT_EQ(run({"fit", path("ingest/dataset.jsonl"), "--out", path("fit")}), 0) << err_.str();
  }

  std::vector<std::string> model_flags() const {
    return {"--retro", path("fit/retro_library.jsonl"), "--forward", path("fit/forward_library.jsonl"),
            "--stock", path("build/stock.txt")};
  }

  std::vector<std::string> eval_args(const std::string &molecules, const std::string &out) const {
    std::vector<std::string> a = {"eval", molecules, "--out", out};
    for (const std::string &f : model_flags()) a.push_back(f);
    return a;
  }

  fs::path dir_;
  std::ostringstream err_;
  testing::SynthCorpus corpus_;
};

TEST(ConfigTest, HashIgnoresJobsAndOut) {
  RunConfig a;
  RunConfig b;
  b.jobs = 8;
  b.out = "elsewhere";
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  b.beam = 6;
  EXPECT_NE(config_hash(a), config_hash(b));
  // FNV-1a 64 reference values.
  EXPECT_EQ(fnv1a64_bytes(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64_bytes("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(ConfigTest, SetValueChecksRanges) {
  RunConfig c;
  set_value(c, "beam", "7");
  set_value(c, "split", "80,10,10");
  EXPECT_EQ(c.beam, 7);
  EXPECT_EQ(c.split, (std::vector<int>{80, 10, 10}));
  EXPECT_THROW(set_value(c, "beam", "0"), CliError);
  EXPECT_THROW(set_value(c, "depth", "16"), CliError);
  EXPECT_THROW(set_value(c, "beam", "3x"), CliError);
  EXPECT_THROW(set_value(c, "split", "50,50,1"), CliError);
  EXPECT_THROW(set_value(c, "nope", "1"), CliError);
  c.topk = 8;
  EXPECT_THROW(validate(c), CliError);
  c.topk = 5;
  c.fp_width = 1000;
  EXPECT_THROW(validate(c), CliError);
}

TEST(ParallelTest, ResultsInIndexOrder) {
  for (int jobs : {1, 3, 16}) {
    const std::vector<int> v = parallel_map<int>(100, jobs, [](std::size_t i) { return int(i * i); });
    ASSERT_EQ(v.size(), 100u);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], int(i * i));
  }
  EXPECT_THROW(parallel_map<int>(10, 4,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw std::runtime_error("x");
                                   return 0;
                                 }),
               std::runtime_error);
}

TEST_F(CliTest, FlagsOverrideFileOverrideDefaults) {
  const std::string conf = write("run.conf", "# comment\nbeam = 3\ndepth=7\n\ntopk = 2\n");
  ASSERT_EQ(run({"bench", "--config", conf, "--beam", "4", "--counts", "1,2,3,4", "--out", path("b")}), 0)
      << err_.str();
  const json m = load_json(path("b/manifest.json"));
  EXPECT_EQ(m["command"], "bench");
  EXPECT_EQ(m["config"]["beam"], "4");
  EXPECT_EQ(m["config"]["depth"], "7");
  EXPECT_EQ(m["config"]["budget"], "500");
  RunConfig expect;
  expect.beam = 4;
  expect.depth = 7;
  expect.topk = 2;
  expect.counts = "1,2,3,4";
  EXPECT_EQ(m["config_hash"], config_hash(expect));
}

TEST_F(CliTest, BadArgumentsExitTwo) {
  EXPECT_EQ(run({}), kInputError);
  EXPECT_EQ(run({"frobnicate"}), kInputError);
  EXPECT_EQ(run({"bench", "--counts", "1,2,3", "--out", path("b")}), kInputError);
  EXPECT_EQ(run({"eval", "--beam", "0", "--out", path("b")}), kInputError);
  EXPECT_EQ(run({"eval", "--beam", "2", "--topk", "3", "--out", path("b")}), kInputError);
  EXPECT_EQ(run({"ingest", path("missing.smi"), "--out", path("b")}), kInputError);
  EXPECT_EQ(run({"bench", "--config", path("missing.conf"), "--out", path("b")}), kInputError);
}

TEST_F(CliTest, IngestCountsAndDrops) {
  const std::string rxn = write("r.smi",
                                "CCO.CC(=O)O>>CCOC(C)=O\n"
                                "OCC.OC(C)=O>>CCOC(C)=O\n"
                                "C1CC>>CCC\n"
                                "CC>>CC\n"
                                "c1ccccc1Br.OB(O)c1ccccc1>>c1ccc(cc1)-c1ccccc1\n");
  ASSERT_EQ(run({"ingest", rxn, "--out", path("i")}), 0) << err_.str();
  EXPECT_EQ(lines(path("i/dataset.jsonl")), 2u);
  EXPECT_EQ(lines(path("i/drops.txt")), 1u);
  const json st = load_json(path("i/ingest_stats.json"));
  EXPECT_EQ(st["lines"], 5);
  EXPECT_EQ(st["parsed"], 4);
  EXPECT_EQ(st["dropped"], 1);
  EXPECT_EQ(st["duplicates"], 1);
  EXPECT_EQ(st["self_reactions"], 1);
  EXPECT_EQ(st["records"], 2);
}

TEST_F(CliTest, BuildDiamondIsReproducible) {
  // A -> B, A -> C, B + C -> D
  const std::string rxn = write("r.smi", "C>>CC\nC>>CCC\nCC.CCC>>CCCC\n");
  ASSERT_EQ(run({"ingest", rxn, "--out", path("i")}), 0) << err_.str();
  ASSERT_EQ(run({"build", path("i/dataset.jsonl"), "--out", path("b1")}), 0) << err_.str();
  EXPECT_EQ(slurp(path("b1/targets.txt")), "CCCC\n");
  EXPECT_EQ(lines(path("b1/routes.jsonl")), 1u);
  EXPECT_EQ(slurp(path("b1/stock.txt")), "C\n");
  const json net = load_json(path("b1/network.json"));
  EXPECT_EQ(net["molecules"], 4);
  EXPECT_EQ(net["reactions"], 3);
  // One target cannot be split three ways.
  EXPECT_EQ(net["train"], 1);
  EXPECT_EQ(net["test"], 0);
  ASSERT_EQ(run({"build", path("i/dataset.jsonl"), "--out", path("b2")}), 0);
  for (const char *f : {"manifest.json", "routes.jsonl", "network.json", "targets_train.txt"}) {
    EXPECT_EQ(slurp(path(std::string("b1/") + f)), slurp(path(std::string("b2/") + f))) << f;
  }
}

TEST_F(CliTest, FitAndEmptyModel) {
  pipeline(2, 60);
  const json st = load_json(path("fit/fit_stats.json"));
  EXPECT_EQ(st["reactions"], 60);
  EXPECT_EQ(st["extracted"], 60);
  EXPECT_EQ(lines(path("fit/retro_library.jsonl")), st["templates"].get<std::size_t>());
  EXPECT_EQ(lines(path("fit/forward_library.jsonl")), st["templates"].get<std::size_t>());

  const std::string rxn = write("u.smi", "CCO.CC(=O)O>>CCOC(C)=O\n");
  ASSERT_EQ(run({"ingest", rxn, "--out", path("u")}), 0);
  EXPECT_EQ(run({"fit", path("u/dataset.jsonl"), "--out", path("uf")}), kEmptyModel);

  const std::string mols = write("m.txt", "CCO\n");
  const std::string empty = write("empty.jsonl", "");
  EXPECT_EQ(run({"eval", mols, "--retro", empty, "--forward", path("fit/forward_library.jsonl"),
                 "--stock", path("build/stock.txt"), "--out", path("e")}),
            kEmptyModel);
}

TEST_F(CliTest, EvalClosedWorldTargets) {
  pipeline(5);
  std::string text;
  for (std::size_t i = 0; i < corpus_.routes.size(); ++i) {
    text += corpus_.routes[i].target + (i % 2 ? " odd" : " even") + "\n";
  }
  const std::string mols = write("m.txt", text);
  ASSERT_EQ(run(eval_args(mols, path("e"))), 0) << err_.str();
  const std::vector<EvalRecord> rs = records(path("e/eval_records.jsonl"));
  ASSERT_EQ(rs.size(), corpus_.routes.size());
  int found = 0;
  for (const EvalRecord &r : rs) {
    EXPECT_FALSE(r.error);
    EXPECT_LE(r.calls, 500);
    if (r.records.empty()) continue;
    ++found;
    EXPECT_DOUBLE_EQ(r.records.front().score, 1.0) << r.smiles;
  }
  EXPECT_GE(found, 0.95 * rs.size());
  const json report = load_json(path("e/report.json"));
  EXPECT_LE(report["max_calls"].get<int>(), 500);
  EXPECT_EQ(lines(path("e/report.csv")), 3u);
  EXPECT_EQ(lines(path("e/timings.jsonl")), rs.size());
}

TEST_F(CliTest, EvalStockMoleculesScoreOne) {
  pipeline(6, 80);
  std::string text;
  for (const std::string &s : corpus_.stock) text += s + "\n";
  const std::string mols = write("m.txt", text);
  ASSERT_EQ(run(eval_args(mols, path("e"))), 0) << err_.str();
  const std::vector<EvalRecord> rs = records(path("e/eval_records.jsonl"));
  EXPECT_DOUBLE_EQ(topk_success(rs, 1), 1.0);
  for (const EvalRecord &r : rs) {
    EXPECT_TRUE(r.in_stock);
    EXPECT_EQ(r.calls, 0);
  }
}

TEST_F(CliTest, EvalBadInputs) {
  pipeline(7, 40);
  EXPECT_EQ(run(eval_args(write("empty.txt", "\n# nothing\n"), path("e"))), kInputError);
  // A bad SMILES is recorded, not fatal.
  ASSERT_EQ(run(eval_args(write("m.txt", "C(C\nCC#N\n"), path("e"))), 0) << err_.str();
  const std::vector<EvalRecord> rs = records(path("e/eval_records.jsonl"));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_TRUE(rs[0].error);
  EXPECT_FALSE(rs[1].error);
  EXPECT_EQ(rs[1].smiles, "CC#N");
}

TEST_F(CliTest, EvalIsDeterministicAcrossJobs) {
  pipeline(8);
  std::string text;
  for (const auto &r : corpus_.routes) text += r.target + "\n";
  const std::string mols = write("m.txt", text);
  std::vector<std::string> a = eval_args(mols, path("e1"));
  std::vector<std::string> b = eval_args(mols, path("e2"));
  b.insert(b.end(), {"--jobs", "4"});
  ASSERT_EQ(run(a), 0);
  ASSERT_EQ(run(b), 0);
  for (const char *f : {"eval_records.jsonl", "report.csv", "report.json", "manifest.json"}) {
    EXPECT_EQ(slurp(path(std::string("e1/") + f)), slurp(path(std::string("e2/") + f))) << f;
  }
  ASSERT_EQ(run({"report", path("e1/eval_records.jsonl"), "--out", path("r")}), 0);
  EXPECT_EQ(slurp(path("r/report.csv")), slurp(path("e1/report.csv")));
}

TEST_F(CliTest, BenchCountsOnly) {
  ASSERT_EQ(run({"bench", "--counts", "599,204,185,39", "--out", path("b")}), 0) << err_.str();
  const json j = load_json(path("b/bench.json"));
  EXPECT_NEAR(j["round_trip"]["accuracy"].get<double>(), 803.0 / 1027.0, 1e-12);
  EXPECT_NEAR(j["round_trip"]["precision"].get<double>(), 599.0 / 784.0, 1e-12);
  EXPECT_NEAR(j["round_trip"]["recall"].get<double>(), 599.0 / 638.0, 1e-12);
  ASSERT_EQ(run({"bench", "--counts", "0,5,0,0", "--out", path("z")}), 0);
  EXPECT_TRUE(load_json(path("z/bench.json"))["round_trip"]["precision"].is_null());
}

TEST_F(CliTest, BenchWithLabels) {
  pipeline(9);
  ASSERT_EQ(run({"build", path("ingest/dataset.jsonl"), "--split", "0,0,100", "--out", path("all")}), 0)
      << err_.str();
  const std::string routes = path("all/routes_test.jsonl");
  const std::size_t n = lines(routes);
  ASSERT_GT(n, 3u);
  std::string labels;
  for (std::size_t i = 0; i < n; ++i) labels += (i % 3 ? "1\n" : "0\n");
  std::vector<std::string> args = {"bench", routes, "--labels", write("l.txt", labels), "--out", path("b")};
  for (const std::string &f : model_flags()) args.push_back(f);
  ASSERT_EQ(run(args), 0) << err_.str();
  const json j = load_json(path("b/bench.json"));
  EXPECT_EQ(j["targets"], n);
  EXPECT_GE(j["search_success_rate"].get<double>(), 0.95);
  const json rt = j["round_trip"];
  EXPECT_EQ(rt["tp"].get<int>() + rt["tn"].get<int>() + rt["fp"].get<int>() + rt["fn"].get<int>(),
            static_cast<int>(n));

  std::string all_feasible;
  for (std::size_t i = 0; i < n; ++i) all_feasible += "feasible\n";
  args[3] = write("yes.txt", all_feasible);
  ASSERT_EQ(run(args), 0) << err_.str();
  const json yes = load_json(path("b/bench.json"))["round_trip"];
  EXPECT_EQ(yes["tn"], 0);
  EXPECT_EQ(yes["fp"], 0);

  args[3] = write("short.txt", "1\n0\n");
  EXPECT_EQ(run(args), kSchemaMismatch);
  args[3] = write("bad.txt", "maybe\n");
  EXPECT_EQ(run(args), kSchemaMismatch);
}

TEST_F(CliTest, MalformedJsonlIsSchemaMismatch) {
  const std::string bad = write("bad.jsonl", "{\"smiles\": \"C\"}\nnot json\n");
  EXPECT_EQ(run({"report", bad, "--out", path("r")}), kSchemaMismatch);
  EXPECT_EQ(run({"build", bad, "--out", path("b")}), kSchemaMismatch);
  EXPECT_EQ(run({"fit", bad, "--out", path("f")}), kSchemaMismatch);
}

TEST_F(CliTest, DeskPipelineIsFast) {
  // 1,000 reactions, 100 molecules, one worker.
  const auto start = std::chrono::steady_clock::now();
  pipeline(10, 1000);
  std::string text;
  for (std::size_t i = 0; i < 100; ++i) text += corpus_.routes[i % corpus_.routes.size()].target + "\n";
  ASSERT_EQ(run(eval_args(write("m.txt", text), path("e"))), 0);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(records(path("e/eval_records.jsonl")).size(), 100u);
  EXPECT_LT(s, 300.0);
}

TEST_F(CliTest, PlantedRulesGiveOneTemplateEach) {
  using testing::Rule;
  const testing::SynthCorpus c = testing::generate_corpus(
      {.reactions = 20,
       .rules = {Rule::kAmideCoupling, Rule::kEsterification, Rule::kSuzuki, Rule::kSulfonamide},
       .max_chain_steps = 1,
       .seed = 3});
  std::string text;
  // Each reaction twice: duplicates merge support rather than add templates.
  for (const std::string &l : c.lines) text += l + "\n" + l + "\n";
  ASSERT_EQ(run({"ingest", write("r.smi", text), "--out", path("i")}), 0);
  ASSERT_EQ(run({"fit", path("i/dataset.jsonl"), "--out", path("f")}), 0) << err_.str();
  EXPECT_EQ(load_json(path("f/fit_stats.json"))["templates"], 4);
  int support = 0;
  std::ifstream in(path("f/retro_library.jsonl"));
  for (std::string line; std::getline(in, line);) support += json::parse(line)["support"].get<int>();
  EXPECT_EQ(support, 40);
  EXPECT_EQ(load_json(path("f/fit_stats.json"))["mappable_fraction"], 1.0);
}

TEST_F(CliTest, IngestAndBuildMatchRecounts) {
  const testing::SynthCorpus c = testing::generate_corpus({.reactions = 300, .seed = 12});
  std::mt19937_64 rng(5);
  std::vector<std::string> lines = c.lines;
  for (int i = 0; i < 120; ++i) lines.push_back(c.lines[rng() % c.lines.size()]);
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string text;
  for (const std::string &l : lines) text += l + "\n";
  ASSERT_EQ(run({"ingest", write("r.smi", text), "--out", path("i")}), 0);

  // Unmapped canonical keys, recounted with a set.
  std::set<std::string> keys;
  std::set<std::string> reactants;
  std::set<std::string> products;
  for (const std::string &l : lines) {
    const Reaction r = parse_reaction_smiles(l);
    keys.insert(r.canonical_key());
    for (const std::string &x : r.reactant_smiles()) reactants.insert(x);
    products.insert(r.product.canonical_smiles());
  }
  const json st = load_json(path("i/ingest_stats.json"));
  EXPECT_EQ(st["records"], keys.size());
  EXPECT_EQ(st["duplicates"], lines.size() - keys.size());

  ASSERT_EQ(run({"build", path("i/dataset.jsonl"), "--out", path("b")}), 0);
  // Targets: products that no reaction consumes.
  std::string expect;
  for (const std::string &p : products) {
    if (!reactants.count(p)) expect += p + "\n";
  }
  EXPECT_EQ(slurp(path("b/targets.txt")), expect);
}

}  // namespace
}  // namespace roundtrip::cli
