//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/simulate/simulate.h"

#include <map>
#include <stdexcept>

#include "roundtrip/chem/smiles.h"

namespace roundtrip {

ReproductionResult reproduce(const SyntheticRoute &route, const ForwardLibrary &lib) {
  ReproductionResult rr;
  std::map<std::string, Molecule> predicted;
  for (const RouteStep &step : route.steps) rr.steps.push_back({step.product, std::nullopt, false});

  for (std::size_t i = 0; i < route.steps.size(); ++i) {
    const RouteStep &step = route.steps[i];
    std::vector<Molecule> inputs;
    for (const std::string &r : step.reactants) {
      const auto it = predicted.find(r);
      inputs.push_back(it != predicted.end() ? it->second : parse_smiles(r));
    }
    try {
      Prediction p = predict_forward(inputs, lib);
      Molecule product = std::move(p.molecules.front());
      rr.steps[i].matched = product.canonical_smiles() == step.product;
      rr.steps[i].predicted = product;
      predicted.emplace(step.product, std::move(product));
    } catch (const NoForwardRule &) {
      rr.failure_step = static_cast<int>(i);
      return rr;
    }
  }
  if (!route.steps.empty()) rr.reproduced = predicted.at(route.steps.back().product);
  return rr;
}

double round_trip_score(const Molecule &m, const ReproductionResult &rr,
                        const FingerprintOptions &fp) {
  if (!rr.reproduced) return 0.0;
  return tanimoto(fingerprint(m, fp.radius, fp.width),
                  fingerprint(*rr.reproduced, fp.radius, fp.width));
}

std::vector<RoundTripRecord> score_molecule(const Molecule &m, const PlannerConfig &cfg,
                                            const RetroLibrary &retro, const ForwardLibrary &fwd,
                                            int k, PlanTrace *trace,
                                            const FingerprintOptions &fp) {
  if (k < 1 || k > cfg.beam_width) throw std::invalid_argument("k must be in [1, beam width]");
  if (trace) *trace = PlanTrace{};
  const std::string &smiles = m.canonical_smiles();
  if (cfg.stock.contains(smiles)) {
    RoundTripRecord rec;
    rec.molecule = smiles;
    rec.route.target = smiles;
    rec.score = 1.0;
    rec.is_stock_shortcircuit = true;
    return {rec};
  }
  std::vector<RoundTripRecord> out;
  for (SyntheticRoute &route : plan(m, cfg, retro, trace)) {
    if (static_cast<int>(out.size()) >= k) break;
    const ReproductionResult rr = reproduce(route, fwd);
    RoundTripRecord rec;
    rec.molecule = smiles;
    rec.score = round_trip_score(m, rr, fp);
    rec.failure_step = rr.failure_step;
    rec.route = std::move(route);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace roundtrip
