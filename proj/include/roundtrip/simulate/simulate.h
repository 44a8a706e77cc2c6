//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_SIMULATE_SIMULATE_H_
#define ROUNDTRIP_SIMULATE_SIMULATE_H_

#include <optional>
#include <string>
#include <vector>

#include "roundtrip/chem/fingerprint.h"
#include "roundtrip/chem/molecule.h"
#include "roundtrip/network/route.h"
#include "roundtrip/planner/planner.h"
#include "roundtrip/templates/predict.h"

namespace roundtrip {

struct StepOutcome {
  // Product recorded in the route.
  std::string expected;
  // Absent when this step failed or was never reached.
  std::optional<Molecule> predicted;
  bool matched = false;
};

struct ReproductionResult {
  std::optional<Molecule> reproduced;
  // One entry per route step, in route order.
  std::vector<StepOutcome> steps;
  std::optional<int> failure_step;
};

// Replays the route forward from its leaves. Each step receives the
// molecules predicted by earlier steps in place of the recorded
// intermediates. Stops at the first step with no forward rule.
ReproductionResult reproduce(const SyntheticRoute &route, const ForwardLibrary &lib);

struct FingerprintOptions {
  int radius = kDefaultFingerprintRadius;
  int width = kDefaultFingerprintWidth;
};

// Tanimoto similarity of m and the reproduced molecule; 0 when reproduction
// failed.
double round_trip_score(const Molecule &m, const ReproductionResult &rr,
                        const FingerprintOptions &fp = {});

struct RoundTripRecord {
  std::string molecule;
  SyntheticRoute route;
  double score = 0.0;
  bool is_stock_shortcircuit = false;
  std::optional<int> failure_step;
};

// Stock molecules get one record with score 1 and no planning. Otherwise the
// top k planned routes are reproduced and scored, in planner order. Throws
// std::invalid_argument unless 1 <= k <= cfg.beam_width.
std::vector<RoundTripRecord> score_molecule(const Molecule &m, const PlannerConfig &cfg,
                                            const RetroLibrary &retro, const ForwardLibrary &fwd,
                                            int k, PlanTrace *trace = nullptr,
                                            const FingerprintOptions &fp = {});

}  // namespace roundtrip

#endif  // ROUNDTRIP_SIMULATE_SIMULATE_H_
