//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/planner/planner.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace roundtrip {
namespace {

struct OpenMolecule {
  std::shared_ptr<const Molecule> mol;
  int depth = 0;
};

struct State {
  std::map<std::string, OpenMolecule> open;
  std::vector<RouteStep> steps;
  double score = 0.0;
  std::string serialized;
};

std::string serialize(const State &s) {
  std::vector<RouteStep> steps = s.steps;
  std::sort(steps.begin(), steps.end());
  std::string out;
  for (const RouteStep &step : steps) {
    out += step.product + "<";
    for (const std::string &r : step.reactants) out += r + ",";
    out += ";";
  }
  out += "|";
  for (const auto &[smiles, _] : s.open) out += smiles + ",";
  return out;
}

// Largest heavy-atom count, then smallest SMILES.
const std::string &choose_open(const State &s) {
  auto best = s.open.begin();
  for (auto it = std::next(best); it != s.open.end(); ++it) {
    if (it->second.mol->heavy_atom_count() > best->second.mol->heavy_atom_count()) best = it;
  }
  return best->first;
}

bool acyclic(const std::vector<RouteStep> &steps) {
  std::map<std::string, const RouteStep *> maker;
  for (const RouteStep &s : steps) maker[s.product] = &s;
  std::map<std::string, int> color;
  std::function<bool(const std::string &)> visit = [&](const std::string &m) {
    const auto it = maker.find(m);
    if (it == maker.end()) return true;
    int &c = color[m];
    if (c == 1) return false;
    if (c == 2) return true;
    c = 1;
    for (const std::string &r : it->second->reactants) {
      if (!visit(r)) return false;
    }
    color[m] = 2;
    return true;
  };
  for (const RouteStep &s : steps) {
    if (!visit(s.product)) return false;
  }
  return true;
}

bool better(const State &a, const State &b) {
  if (a.score != b.score) return a.score > b.score;
  return a.serialized < b.serialized;
}

}  // namespace

void validate_config(const PlannerConfig &cfg) {
  if (cfg.beam_width < 1) throw std::invalid_argument("beam width must be positive");
  if (cfg.max_depth < 1 || cfg.max_depth > 15)
    throw std::invalid_argument("max depth must be in [1, 15]");
  if (cfg.call_budget < 1) throw std::invalid_argument("call budget must be positive");
}

RetroModel retro_model(const RetroLibrary &lib) {
  return [&lib](const Molecule &m, int k) { return predict_retro_topk(m, k, lib); };
}

std::vector<SyntheticRoute> plan(const Molecule &target, const PlannerConfig &cfg,
                                 const RetroLibrary &lib, PlanTrace *trace) {
  return plan(target, cfg, retro_model(lib), trace);
}

std::vector<SyntheticRoute> plan(const Molecule &target, const PlannerConfig &cfg,
                                 const RetroModel &model, PlanTrace *trace) {
  validate_config(cfg);
  PlanTrace local;
  PlanTrace &tr = trace ? *trace : local;
  tr = PlanTrace{};

  State root;
  root.open[target.canonical_smiles()] = {std::make_shared<Molecule>(target), 0};
  root.serialized = serialize(root);
  std::vector<State> beam = {std::move(root)};
  std::vector<State> finished;

  while (!beam.empty() && static_cast<int>(finished.size()) < cfg.beam_width) {
    ++tr.iterations;
    std::vector<State> children;
    for (const State &state : beam) {
      if (static_cast<int>(tr.expanded.size()) >= cfg.call_budget) {
        tr.budget_exhausted = true;
        break;
      }
      const std::string smiles = choose_open(state);
      const OpenMolecule chosen = state.open.at(smiles);
      if (chosen.depth >= cfg.max_depth) continue;
      tr.expanded.push_back(smiles);
      const std::vector<Prediction> preds = model(*chosen.mol, cfg.beam_width);
      for (const Prediction &p : preds) {
        if (!(p.score > 0.0)) continue;
        State child;
        child.open = state.open;
        child.open.erase(smiles);
        child.steps = state.steps;
        RouteStep step{smiles, {}};
        std::set<std::string> made;
        for (const RouteStep &s : child.steps) made.insert(s.product);
        for (const Molecule &r : p.molecules) {
          const std::string &rs = r.canonical_smiles();
          step.reactants.push_back(rs);
          if (cfg.stock.contains(rs) || made.count(rs) || rs == smiles) continue;
          auto [it, inserted] = child.open.try_emplace(rs);
          if (inserted) it->second.mol = std::make_shared<Molecule>(r);
          it->second.depth = std::max(it->second.depth, chosen.depth + 1);
        }
        std::sort(step.reactants.begin(), step.reactants.end());
        step.reactants.erase(std::unique(step.reactants.begin(), step.reactants.end()),
                             step.reactants.end());
        child.steps.push_back(std::move(step));
        if (!acyclic(child.steps)) continue;
        child.score = state.score + std::log(p.score);
        child.serialized = serialize(child);
        children.push_back(std::move(child));
      }
    }
    std::sort(children.begin(), children.end(), better);
    children.erase(std::unique(children.begin(), children.end(),
                               [](const State &a, const State &b) {
                                 return a.serialized == b.serialized;
                               }),
                   children.end());
    if (static_cast<int>(children.size()) > cfg.beam_width) children.resize(cfg.beam_width);
    beam.clear();
    for (State &c : children) {
      (c.open.empty() ? finished : beam).push_back(std::move(c));
    }
    if (tr.budget_exhausted) break;
  }

  std::sort(finished.begin(), finished.end(), better);
  std::vector<SyntheticRoute> routes;
  std::set<std::vector<RouteStep>> seen;
  for (const State &s : finished) {
    if (static_cast<int>(routes.size()) >= cfg.beam_width) break;
    SyntheticRoute route;
    try {
      route = make_route(target.canonical_smiles(), s.steps);
    } catch (const RouteError &) {
      continue;
    }
    if (validate_route(route, cfg.max_depth, &cfg.stock)) continue;
    if (!seen.insert(route.steps).second) continue;
    route.confidence = std::exp(s.score);
    routes.push_back(std::move(route));
  }
  return routes;
}

int count_calls(const PlanTrace &trace) { return static_cast<int>(trace.expanded.size()); }

}  // namespace roundtrip
