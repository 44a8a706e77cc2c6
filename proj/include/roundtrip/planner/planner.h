//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_PLANNER_PLANNER_H_
#define ROUNDTRIP_PLANNER_PLANNER_H_

#include <functional>
#include <string>
#include <vector>

#include "roundtrip/chem/molecule.h"
#include "roundtrip/network/route.h"
#include "roundtrip/templates/predict.h"

namespace roundtrip {

struct PlannerConfig {
  int beam_width = 5;
  int max_depth = 15;
  int call_budget = 500;
  StockSet stock;
};

// Throws std::invalid_argument when a knob is out of range.
void validate_config(const PlannerConfig &cfg);

// Single-step retro model: up to k candidate reactant sets with scores in
// (0, 1], best first.
using RetroModel = std::function<std::vector<Prediction>(const Molecule &, int k)>;

RetroModel retro_model(const RetroLibrary &lib);

struct PlanTrace {
  // One entry per retro call, in call order.
  std::vector<std::string> expanded;
  int iterations = 0;
  bool budget_exhausted = false;
};

// Level-synchronous beam search. Each iteration expands, for every state in
// the beam, its largest open molecule (heavy atoms, then SMILES); children
// score parent + log(step score) and the best beam_width children over the
// whole level survive, ties broken on the serialized state. Reactants in
// stock become leaves. Children that would close a cycle are dropped, as are
// states whose chosen molecule has no prediction or sits at max_depth.
// Returns at most beam_width routes, best confidence first; empty when
// nothing was found.
std::vector<SyntheticRoute> plan(const Molecule &target, const PlannerConfig &cfg,
                                 const RetroModel &model, PlanTrace *trace = nullptr);
std::vector<SyntheticRoute> plan(const Molecule &target, const PlannerConfig &cfg,
                                 const RetroLibrary &lib, PlanTrace *trace = nullptr);

int count_calls(const PlanTrace &trace);

}  // namespace roundtrip

#endif  // ROUNDTRIP_PLANNER_PLANNER_H_
