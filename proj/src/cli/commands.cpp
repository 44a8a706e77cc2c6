//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/cli/commands.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "roundtrip/chem/smiles.h"
#include "roundtrip/cli/parallel.h"
#include "roundtrip/metrics/metrics.h"
#include "roundtrip/metrics/report.h"
#include "roundtrip/network/network.h"
#include "roundtrip/network/route.h"
#include "roundtrip/network/split.h"
#include "roundtrip/planner/planner.h"
#include "roundtrip/reaction/dataset.h"
#include "roundtrip/simulate/simulate.h"
#include "roundtrip/templates/extract.h"
#include "roundtrip/templates/library_io.h"

namespace roundtrip::cli {
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::ifstream open_input(const std::string &path, const std::string &what) {
  if (path.empty()) throw CliError(kInputError, "no " + what + " given");
  std::ifstream in(path);
  if (!in || fs::is_directory(path)) throw CliError(kInputError, "cannot read " + what + ": " + path);
  return in;
}

class OutputDir {
public:
  OutputDir(const RunConfig &cfg, std::string command) : cfg_(cfg), command_(std::move(command)) {
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    if (ec || !fs::is_directory(cfg.out)) {
      throw CliError(kInputError, "cannot create output directory " + cfg.out);
    }
  }

  std::ofstream open(const std::string &name) {
    std::ofstream out(fs::path(cfg_.out) / name, std::ios::binary);
    if (!out) throw CliError(kInputError, "cannot write " + name);
    outputs_.push_back(name);
    return out;
  }

  void write(const std::string &name, const std::string &text) { open(name) << text; }
  void write_json(const std::string &name, const Json &j) { write(name, j.dump(2) + "\n"); }

  void input(const std::string &key, const std::string &path) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64_bytes(read_file(path))));
    inputs_[key] = {{"path", path}, {"fnv1a64", buf}};
  }

  // Run-dependent files that the manifest lists but does not vouch for.
  void volatile_output(const std::string &name) { volatile_.insert(name); }

  void finish(const Json &counts) {
    Json m;
    m["command"] = command_;
    m["config_hash"] = config_hash(cfg_);
    m["seed"] = cfg_.seed;
    Json config;
    std::istringstream lines(canonical_text(cfg_));
    for (std::string line; std::getline(lines, line);) {
      const auto eq = line.find('=');
      config[line.substr(0, eq)] = line.substr(eq + 1);
    }
    m["config"] = config;
    m["inputs"] = inputs_;
    Json outs = Json::array();
    for (const std::string &o : outputs_) {
      outs.push_back({{"file", o}, {"deterministic", !volatile_.count(o)}});
    }
    m["outputs"] = outs;
    m["counts"] = counts;
    std::ofstream(fs::path(cfg_.out) / "manifest.json", std::ios::binary) << m.dump(2) << "\n";
  }

private:
  const RunConfig &cfg_;
  std::string command_;
  std::vector<std::string> outputs_;
  std::set<std::string> volatile_;
  Json inputs_ = Json::object();
};

ReactionDataset load_dataset(const RunConfig &cfg, OutputDir &dir) {
  std::ifstream in = open_input(cfg.dataset, "dataset");
  dir.input("dataset", cfg.dataset);
  try {
    return read_dataset_jsonl(in);
  } catch (const std::exception &e) {
    throw CliError(kSchemaMismatch, e.what());
  }
}

StockSet load_stock(const RunConfig &cfg, OutputDir &dir) {
  std::ifstream in = open_input(cfg.stock, "stock file");
  dir.input("stock", cfg.stock);
  try {
    return read_stock(in);
  } catch (const std::exception &e) {
    throw CliError(kInputError, std::string("stock: ") + e.what());
  }
}

struct Models {
  RetroLibrary retro;
  ForwardLibrary forward;
};

Models load_models(const RunConfig &cfg, OutputDir &dir) {
  std::ifstream rin = open_input(cfg.retro_library, "retro library");
  std::ifstream fin = open_input(cfg.forward_library, "forward library");
  dir.input("retro_library", cfg.retro_library);
  dir.input("forward_library", cfg.forward_library);
  Models m;
  try {
    m.retro = read_retro_library(rin);
    m.forward = read_forward_library(fin);
  } catch (const std::exception &e) {
    throw CliError(kSchemaMismatch, e.what());
  }
  if (m.retro.empty() || m.forward.empty()) throw CliError(kEmptyModel, "template library is empty");
  return m;
}

PlannerConfig planner_config(const RunConfig &cfg, StockSet stock) {
  PlannerConfig p;
  p.beam_width = cfg.beam;
  p.max_depth = cfg.depth;
  p.call_budget = cfg.budget;
  p.stock = std::move(stock);
  return p;
}

struct Scored {
  EvalRecord record;
  double wall_ms = 0.0;
};

Scored score_one(const std::string &smiles, const std::string &group, const RunConfig &cfg,
                 const PlannerConfig &pcfg, const Models &models) {
  const auto start = std::chrono::steady_clock::now();
  Scored s;
  s.record.smiles = smiles;
  s.record.group = group;
  try {
    const Molecule m = parse_smiles(smiles);
    s.record.smiles = m.canonical_smiles();
    s.record.heavy_atoms = m.heavy_atom_count();
    s.record.in_stock = pcfg.stock.contains(m.canonical_smiles());
    PlanTrace trace;
    s.record.records = score_molecule(m, pcfg, models.retro, models.forward, cfg.topk, &trace,
                                      {cfg.fp_radius, cfg.fp_width});
    s.record.calls = count_calls(trace);
    s.record.solved = s.record.in_stock || !s.record.records.empty();
  } catch (const std::exception &e) {
    s.record.error = e.what();
  }
  s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return s;
}

std::string timings_jsonl(const std::vector<Scored> &scored) {
  std::string out;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    Json j;
    j["index"] = i;
    j["smiles"] = scored[i].record.smiles;
    j["calls"] = scored[i].record.calls;
    j["wall_ms"] = scored[i].wall_ms;
    out += j.dump() + "\n";
  }
  return out;
}

int max_calls(const std::vector<EvalRecord> &records, int budget) {
  int most = 0;
  for (const EvalRecord &r : records) most = std::max(most, r.calls);
  if (most > budget) {
    throw CliError(kInternalError, "retro-call budget exceeded: " + std::to_string(most));
  }
  return most;
}

std::string records_jsonl(const std::vector<EvalRecord> &records) {
  std::ostringstream out;
  write_eval_records_jsonl(records, out);
  return out.str();
}

// '#' is also the SMILES triple bond, so only whole-line comments count.
bool is_comment(const std::string &line) {
  const auto first = line.find_first_not_of(" \t");
  return first != std::string::npos && line[first] == '#';
}

std::string join_lines(const std::vector<std::string> &items) {
  std::string out;
  for (const std::string &s : items) out += s + "\n";
  return out;
}

}  // namespace

void cmd_ingest(const RunConfig &cfg, std::ostream &log) {
  std::ifstream in = open_input(cfg.reactions, "reactions file");
  OutputDir dir(cfg, "ingest");
  dir.input("reactions", cfg.reactions);
  IngestStats stats;
  std::vector<std::string> drops;
  const ReactionDataset ds = ingest_reactions(in, &stats, &drops);
  std::ostringstream data;
  write_dataset_jsonl(ds, data);
  dir.write("dataset.jsonl", data.str());
  Json counts;
  counts["lines"] = stats.lines;
  counts["parsed"] = stats.parsed;
  counts["dropped"] = stats.dropped;
  counts["self_reactions"] = stats.dedup.self_reactions;
  counts["duplicates"] = stats.dedup.duplicates;
  counts["records"] = ds.size();
  Json st = counts;
  st["config_hash"] = config_hash(cfg);
  dir.write_json("ingest_stats.json", st);
  dir.write("drops.txt", join_lines(drops));
  dir.finish(counts);
  log << "ingest: " << stats.parsed << " parsed, " << stats.dropped << " dropped, "
      << ds.size() << " unique reactions\n";
}

void cmd_build(const RunConfig &cfg, std::ostream &log) {
  OutputDir dir(cfg, "build");
  const ReactionDataset ds = load_dataset(cfg, dir);
  std::optional<StockSet> given;
  if (!cfg.stock.empty()) given = load_stock(cfg, dir);

  const ReactionNetwork net = build_network(ds);
  const std::vector<std::string> targets = find_targets(net);
  RouteExtractOptions opts;
  opts.max_depth = cfg.depth;
  opts.budget = static_cast<std::size_t>(cfg.route_budget);
  opts.stock = given ? &*given : nullptr;
  std::vector<TargetRoutes> entries;
  std::vector<SyntheticRoute> all;
  for (const std::string &t : targets) {
    TargetRoutes e{t, extract_routes(net, t, opts)};
    if (e.routes.empty()) continue;
    all.insert(all.end(), e.routes.begin(), e.routes.end());
    entries.push_back(std::move(e));
  }
  const StockSet stock = given ? *given : default_stock(all);

  std::ostringstream routes;
  write_routes_jsonl(entries, routes);
  dir.write("routes.jsonl", routes.str());
  dir.write("targets.txt", join_lines(targets));
  std::ostringstream stock_text;
  write_stock(stock, stock_text);
  dir.write("stock.txt", stock_text.str());

  // Split targets that have routes; too few targets all go to training.
  SplitCounts counts{entries.size(), 0, 0};
  const SplitRatios ratios{static_cast<double>(cfg.split[0]), static_cast<double>(cfg.split[1]),
                           static_cast<double>(cfg.split[2])};
  try {
    counts = split_counts(entries.size(), ratios);
  } catch (const std::invalid_argument &) {
    log << "build: " << entries.size() << " targets, too few to split; all assigned to train\n";
  }
  const DatasetSplit<TargetRoutes> split = split_dataset(entries, counts, cfg.seed);
  const auto names = [](const std::vector<TargetRoutes> &es) {
    std::vector<std::string> out;
    for (const TargetRoutes &e : es) out.push_back(e.target);
    std::sort(out.begin(), out.end());
    return out;
  };
  dir.write("targets_train.txt", join_lines(names(split.train)));
  dir.write("targets_validation.txt", join_lines(names(split.validation)));
  dir.write("targets_test.txt", join_lines(names(split.test)));
  std::ostringstream test_routes;
  write_routes_jsonl(split.test, test_routes);
  dir.write("routes_test.jsonl", test_routes.str());

  // Reactions used by training routes, for fitting without test leakage.
  std::set<std::string> train_keys;
  for (const TargetRoutes &e : split.train) {
    for (const SyntheticRoute &r : e.routes) {
      for (const RouteStep &s : r.steps) {
        std::string key;
        for (const std::string &x : s.reactants) key += (key.empty() ? "" : ".") + x;
        train_keys.insert(key + ">>" + s.product);
      }
    }
  }
  std::vector<Reaction> train;
  for (const Reaction &r : ds.reactions()) {
    std::vector<std::string> rs = r.reactant_smiles();
    std::sort(rs.begin(), rs.end());
    std::string key;
    for (const std::string &x : rs) key += (key.empty() ? "" : ".") + x;
    if (train_keys.count(key + ">>" + r.product.canonical_smiles())) train.push_back(r);
  }
  std::ostringstream train_ds;
  write_dataset_jsonl(ReactionDataset(std::move(train)), train_ds);
  dir.write("dataset_train.jsonl", train_ds.str());

  Json c;
  c["molecules"] = net.num_molecules();
  c["reactions"] = net.num_reactions();
  c["edges"] = net.num_edges();
  c["targets"] = targets.size();
  c["targets_with_routes"] = entries.size();
  c["routes"] = all.size();
  c["stock"] = stock.size();
  c["train"] = split.train.size();
  c["validation"] = split.validation.size();
  c["test"] = split.test.size();
  Json network = c;
  network["config_hash"] = config_hash(cfg);
  dir.write_json("network.json", network);
  dir.finish(c);
  log << "build: " << targets.size() << " targets, " << all.size() << " routes, "
      << stock.size() << " stock molecules\n";
}

void cmd_fit(const RunConfig &cfg, std::ostream &log) {
  OutputDir dir(cfg, "fit");
  const ReactionDataset ds = load_dataset(cfg, dir);
  const TemplateSet set = extract_templates(ds, cfg.radius);
  if (set.stats.extracted == 0) throw CliError(kEmptyModel, "no mappable reactions in dataset");
  std::ostringstream retro;
  write_library_jsonl(RetroLibrary(set.retro), retro);
  dir.write("retro_library.jsonl", retro.str());
  std::ostringstream forward;
  write_library_jsonl(ForwardLibrary(set.forward), forward);
  dir.write("forward_library.jsonl", forward.str());
  Json c;
  c["reactions"] = set.stats.reactions;
  c["unmapped"] = set.stats.unmapped;
  c["failed"] = set.stats.failed;
  c["extracted"] = set.stats.extracted;
  c["mappable_fraction"] =
      set.stats.reactions ? double(set.stats.reactions - set.stats.unmapped) / set.stats.reactions : 0.0;
  c["templates"] = set.retro.size();
  c["radius"] = cfg.radius;
  Json st = c;
  st["config_hash"] = config_hash(cfg);
  dir.write_json("fit_stats.json", st);
  dir.finish(c);
  log << "fit: " << set.retro.size() << " templates from " << set.stats.extracted << " of "
      << set.stats.reactions << " reactions\n";
}

void cmd_eval(const RunConfig &cfg, std::ostream &log) {
  std::ifstream in = open_input(cfg.molecules, "molecules file");
  OutputDir dir(cfg, "eval");
  dir.input("molecules", cfg.molecules);
  std::vector<std::pair<std::string, std::string>> items;
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(is_comment(line) ? std::string() : line);
    std::string smiles;
    std::string group;
    if (!(fields >> smiles)) continue;
    if (!(fields >> group)) group = "all";
    items.emplace_back(smiles, group);
  }
  if (items.empty()) throw CliError(kInputError, "molecules file is empty");
  const Models models = load_models(cfg, dir);
  const PlannerConfig pcfg = planner_config(cfg, load_stock(cfg, dir));

  const std::vector<Scored> scored = parallel_map<Scored>(items.size(), cfg.jobs, [&](std::size_t i) {
    return score_one(items[i].first, items[i].second, cfg, pcfg, models);
  });
  std::vector<EvalRecord> records;
  for (const Scored &s : scored) records.push_back(s.record);
  const int most = max_calls(records, cfg.budget);

  dir.write("eval_records.jsonl", records_jsonl(records));
  dir.write("timings.jsonl", timings_jsonl(scored));
  dir.volatile_output("timings.jsonl");
  const std::vector<ReportRow> rows = summarize(records, cfg.topk);
  std::ostringstream csv;
  write_report_csv(rows, csv);
  dir.write("report.csv", csv.str());
  dir.write("report.txt", format_report_text(rows));
  Json report;
  report["config_hash"] = config_hash(cfg);
  report["rows"] = report_json(rows);
  report["max_calls"] = most;
  report["call_budget"] = cfg.budget;
  dir.write_json("report.json", report);

  int errors = 0;
  for (const EvalRecord &r : records) errors += r.error ? 1 : 0;
  Json c;
  c["molecules"] = records.size();
  c["errors"] = errors;
  c["max_calls"] = most;
  dir.finish(c);
  log << format_report_text(rows);
  if (errors) log << "eval: " << errors << " molecules failed, see eval_records.jsonl\n";
}

namespace {

std::optional<bool> parse_label(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "1" || s == "true" || s == "feasible") return true;
  if (s == "0" || s == "false" || s == "infeasible") return false;
  return std::nullopt;
}

ConfusionCounts parse_counts(const std::string &text) {
  std::vector<std::int64_t> v;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size() || v.back() < 0) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw CliError(kInputError, "counts must be four non-negative integers tp,tn,fp,fn");
    }
  }
  if (v.size() != 4) throw CliError(kInputError, "counts must be four non-negative integers tp,tn,fp,fn");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

void cmd_bench(const RunConfig &cfg, std::ostream &log) {
  if (!cfg.counts.empty()) {
    OutputDir dir(cfg, "bench");
    const ConfusionCounts c = parse_counts(cfg.counts);
    const ConfusionStats s = confusion_stats(c);
    Json j;
    j["config_hash"] = config_hash(cfg);
    j["round_trip"] = confusion_json(c, s);
    dir.write_json("bench.json", j);
    const std::string text = format_confusion_text(c, s);
    dir.write("bench.txt", text);
    dir.finish(Json::object());
    log << text;
    return;
  }

  std::ifstream in = open_input(cfg.routes, "reference routes");
  OutputDir dir(cfg, "bench");
  dir.input("routes", cfg.routes);
  std::vector<TargetRoutes> refs;
  try {
    refs = read_routes_jsonl(in);
  } catch (const std::exception &e) {
    throw CliError(kSchemaMismatch, e.what());
  }
  if (refs.empty()) throw CliError(kInputError, "no reference routes");

  std::optional<std::vector<bool>> labels;
  if (!cfg.labels.empty()) {
    std::ifstream lin = open_input(cfg.labels, "labels file");
    dir.input("labels", cfg.labels);
    labels.emplace();
    int line_no = 0;
    for (std::string line; std::getline(lin, line);) {
      ++line_no;
      std::istringstream fields(is_comment(line) ? std::string() : line);
      std::vector<std::string> f;
      for (std::string x; fields >> x;) f.push_back(x);
      if (f.empty()) continue;
      const std::optional<bool> v = parse_label(f.back());
      if (!v || f.size() > 2) {
        throw CliError(kSchemaMismatch, "labels line " + std::to_string(line_no) + ": bad label");
      }
      if (f.size() == 2) {
        const std::size_t i = labels->size();
        if (i >= refs.size() || parse_smiles(f[0]).canonical_smiles() != refs[i].target) {
          throw CliError(kSchemaMismatch, "labels line " + std::to_string(line_no) + ": target mismatch");
        }
      }
      labels->push_back(*v);
    }
    if (labels->size() != refs.size()) {
      throw CliError(kSchemaMismatch, "labels file has " + std::to_string(labels->size()) +
                                          " rows for " + std::to_string(refs.size()) + " targets");
    }
  }

  const Models models = load_models(cfg, dir);
  StockSet stock;
  if (!cfg.stock.empty()) {
    stock = load_stock(cfg, dir);
  } else {
    std::vector<SyntheticRoute> all;
    for (const TargetRoutes &e : refs) all.insert(all.end(), e.routes.begin(), e.routes.end());
    stock = default_stock(all);
  }
  const PlannerConfig pcfg = planner_config(cfg, std::move(stock));
  std::vector<Scored> scored = parallel_map<Scored>(refs.size(), cfg.jobs, [&](std::size_t i) {
    Scored s = score_one(refs[i].target, "bench", cfg, pcfg, models);
    const auto &rs = s.record.records;
    s.record.matched = !rs.empty() && !rs.front().is_stock_shortcircuit &&
                       match_starting_materials(rs.front().route, refs[i].routes);
    return s;
  });
  std::vector<EvalRecord> records;
  for (const Scored &s : scored) records.push_back(s.record);
  const int most = max_calls(records, cfg.budget);
  dir.write("bench_records.jsonl", records_jsonl(records));
  dir.write("timings.jsonl", timings_jsonl(scored));
  dir.volatile_output("timings.jsonl");

  int matched = 0;
  for (const EvalRecord &r : records) matched += r.matched.value_or(false) ? 1 : 0;
  Json j;
  j["config_hash"] = config_hash(cfg);
  j["targets"] = records.size();
  j["search_success_rate"] = search_success_rate(records);
  j["matching_accuracy"] = double(matched) / records.size();
  j["max_calls"] = most;
  j["call_budget"] = cfg.budget;
  std::ostringstream text;
  text << "targets             " << records.size() << '\n';
  text << std::fixed << std::setprecision(2);
  text << "search success rate " << 100.0 * search_success_rate(records) << "%\n";
  text << "matching accuracy   " << 100.0 * matched / records.size() << "%\n";
  if (labels) {
    const ConfusionCounts c = tally(records, *labels);
    const ConfusionStats s = confusion_stats(c);
    j["round_trip"] = confusion_json(c, s);
    // Search success as a classifier: every solved target is called feasible.
    ConfusionCounts search;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!records[i].solved) continue;
      ((*labels)[i] ? search.tp : search.fp) += 1;
    }
    j["search_success"] = confusion_json(search, confusion_stats(search));
    text << "round-trip score\n" << format_confusion_text(c, s);
    text << "search success\n" << format_confusion_text(search, confusion_stats(search));
  } else {
    text << "no labels: confusion statistics skipped\n";
  }
  dir.write_json("bench.json", j);
  dir.write("bench.txt", text.str());
  Json c;
  c["targets"] = records.size();
  c["matched"] = matched;
  c["max_calls"] = most;
  dir.finish(c);
  log << text.str();
}

void cmd_report(const RunConfig &cfg, std::ostream &log) {
  std::ifstream in = open_input(cfg.records, "records file");
  OutputDir dir(cfg, "report");
  dir.input("records", cfg.records);
  std::vector<EvalRecord> records;
  try {
    records = read_eval_records_jsonl(in);
  } catch (const std::exception &e) {
    throw CliError(kSchemaMismatch, e.what());
  }
  if (records.empty()) throw CliError(kInputError, "records file is empty");
  int k = cfg.topk;
  for (const EvalRecord &r : records) k = std::max<int>(k, r.records.size());
  const std::vector<ReportRow> rows = summarize(records, std::min(k, cfg.topk));
  std::ostringstream csv;
  write_report_csv(rows, csv);
  dir.write("report.csv", csv.str());
  dir.write("report.txt", format_report_text(rows));
  Json report;
  report["config_hash"] = config_hash(cfg);
  report["rows"] = report_json(rows);
  dir.write_json("report.json", report);
  Json c;
  c["records"] = records.size();
  dir.finish(c);
  log << format_report_text(rows);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Round-trip synthesizability toolkit", "roundtrip"};
  app.require_subcommand(1);

  struct Flag {
    std::string key;
    std::string value;
    CLI::Option *opt = nullptr;
  };
  std::map<std::string, std::vector<Flag>> flags;
  std::string config_file;
  std::map<std::string, std::string> positional;

  const auto add = [&](CLI::App *sub, const std::string &name, const std::string &key,
                       const std::string &help) {
    Flag &f = flags[sub->get_name()].emplace_back();
    f.key = key;
    f.opt = sub->add_option(name, f.value, help);
  };
  const auto command = [&](const std::string &name, const std::string &help,
                           const std::string &input_key) {
    CLI::App *sub = app.add_subcommand(name, help);
    flags[name].reserve(32);
    sub->add_option("--config", config_file, "key = value config file");
    add(sub, "--seed", "seed", "random seed");
    add(sub, "--jobs", "jobs", "worker threads");
    add(sub, "--out", "out", "output directory");
    sub->add_option("input", positional[name], "primary input (" + input_key + ")");
    return sub;
  };

  CLI::App *ingest = command("ingest", "clean and deduplicate reaction SMILES", "reactions");
  add(ingest, "--reactions", "reactions", "reaction SMILES file");

  CLI::App *build = command("build", "reaction network, targets, routes, stock, split", "dataset");
  add(build, "--dataset", "dataset", "dataset JSONL");
  add(build, "--stock", "stock", "stock file used instead of route leaves");
  add(build, "--depth", "depth", "maximum route depth");
  add(build, "--route-budget", "route_budget", "routes per target (0 = all)");
  add(build, "--split", "split", "train,validation,test percentages");

  CLI::App *fit = command("fit", "extract template libraries", "dataset");
  add(fit, "--dataset", "dataset", "dataset JSONL");
  add(fit, "--radius", "radius", "extraction radius");

  const auto planner_flags = [&](CLI::App *sub) {
    add(sub, "--stock", "stock", "stock file");
    add(sub, "--retro", "retro_library", "retro library JSONL");
    add(sub, "--forward", "forward_library", "forward library JSONL");
    add(sub, "--beam", "beam", "beam width");
    add(sub, "--depth", "depth", "maximum route depth");
    add(sub, "--budget", "budget", "retro calls per molecule");
    add(sub, "--topk", "topk", "routes scored per molecule");
    add(sub, "--fp-radius", "fp_radius", "fingerprint radius");
    add(sub, "--fp-width", "fp_width", "fingerprint width");
  };
  CLI::App *eval = command("eval", "round-trip scores for a molecule list", "molecules");
  add(eval, "--molecules", "molecules", "one SMILES per line, optional group column");
  planner_flags(eval);

  CLI::App *bench = command("bench", "metric benchmark on reference routes", "routes");
  add(bench, "--routes", "routes", "reference routes JSONL");
  add(bench, "--labels", "labels", "feasibility label per target");
  add(bench, "--counts", "counts", "report statistics of tp,tn,fp,fn only");
  planner_flags(bench);

  CLI::App *report = command("report", "summarize eval records", "records");
  add(report, "--records", "records", "eval records JSONL");
  add(report, "--topk", "topk", "top-k columns");

  const std::map<std::string, std::string> input_keys = {
      {"ingest", "reactions"}, {"build", "dataset"}, {"fit", "dataset"},
      {"eval", "molecules"},   {"bench", "routes"},  {"report", "records"},
  };

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    RunConfig cfg;
    if (name == "report") cfg.topk = kReportTopK;
    if (!config_file.empty()) load_config_file(cfg, config_file);
    if (!positional[name].empty()) set_value(cfg, input_keys.at(name), positional[name]);
    for (const Flag &f : flags[name]) {
      if (f.opt->count()) set_value(cfg, f.key, f.value);
    }
    validate(cfg);
    if (name == "ingest") cmd_ingest(cfg, err);
    if (name == "build") cmd_build(cfg, err);
    if (name == "fit") cmd_fit(cfg, err);
    if (name == "eval") cmd_eval(cfg, err);
    if (name == "bench") cmd_bench(cfg, err);
    if (name == "report") cmd_report(cfg, err);
    return kOk;
  } catch (const CliError &e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace roundtrip::cli
