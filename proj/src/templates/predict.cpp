//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/predict.h"

#include <map>
#include <optional>

#include "roundtrip/templates/apply.h"

namespace roundtrip {

std::string Prediction::key() const {
  std::string s;
  for (const Molecule &m : molecules) {
    if (!s.empty()) s += '.';
    s += m.canonical_smiles();
  }
  return s;
}

std::vector<Prediction> predict_retro_topk(const Molecule &product, int k,
                                           const RetroLibrary &lib) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  struct Yield {
    const RetroTemplate *rule;
    std::vector<std::vector<Molecule>> outcomes;
  };
  std::vector<Yield> yields;
  double total_support = 0.0;
  for (const RetroTemplate &t : lib.templates()) {
    std::vector<std::vector<Molecule>> outcomes = apply_retro(t, product);
    if (outcomes.empty()) continue;
    total_support += t.support;
    yields.push_back({&t, std::move(outcomes)});
  }

  std::map<std::string, Prediction> best;
  for (Yield &y : yields) {
    const double score = y.rule->support / total_support /
                         static_cast<double>(y.outcomes.size());
    for (std::vector<Molecule> &mols : y.outcomes) {
      Prediction p{std::move(mols), score, y.rule->id};
      auto [it, inserted] = best.try_emplace(p.key(), p);
      if (!inserted && score > it->second.score) it->second = std::move(p);
    }
  }

  std::vector<Prediction> ranked;
  for (auto &[key, p] : best) ranked.push_back(std::move(p));
  // `best` is keyed, so a stable sort on score keeps key order among ties.
  std::stable_sort(ranked.begin(), ranked.end(), [](const Prediction &a, const Prediction &b) {
    return a.score > b.score;
  });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(k);
  return ranked;
}

Prediction predict_forward(const std::vector<Molecule> &reactants,
                           const ForwardLibrary &lib) {
  std::optional<Prediction> chosen;
  int chosen_support = 0;
  double total_support = 0.0;
  for (const ForwardTemplate &t : lib.templates()) {
    std::optional<Molecule> product = apply_forward(t, reactants);
    if (!product) continue;
    total_support += t.support;
    const bool better =
        !chosen || t.support > chosen_support ||
        (t.support == chosen_support &&
         product->canonical_smiles() < chosen->molecules[0].canonical_smiles());
    if (better) {
      chosen = Prediction{{std::move(*product)}, 0.0, t.id};
      chosen_support = t.support;
    }
  }
  if (!chosen) throw NoForwardRule();
  chosen->score = chosen_support / total_support;
  return std::move(*chosen);
}

}  // namespace roundtrip
