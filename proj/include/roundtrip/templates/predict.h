//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_PREDICT_H_
#define ROUNDTRIP_TEMPLATES_PREDICT_H_

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "roundtrip/chem/molecule.h"
#include "roundtrip/templates/template.h"

namespace roundtrip {

struct Prediction {
  // Sorted by canonical SMILES.
  std::vector<Molecule> molecules;
  double score = 0.0;
  int template_id = -1;

  // Canonical SMILES joined with '.'.
  std::string key() const;
};

template <typename T>
class TemplateLibrary {
public:
  static constexpr Direction kDirection = T::kDirection;

  TemplateLibrary() = default;
  explicit TemplateLibrary(std::vector<T> templates)
      : templates_(std::move(templates)) {
    std::sort(templates_.begin(), templates_.end(),
              [](const T &a, const T &b) { return a.id < b.id; });
  }

  const std::vector<T> &templates() const { return templates_; }
  std::size_t size() const { return templates_.size(); }
  bool empty() const { return templates_.empty(); }

private:
  std::vector<T> templates_;
};

using RetroLibrary = TemplateLibrary<RetroTemplate>;
using ForwardLibrary = TemplateLibrary<ForwardTemplate>;

class NoForwardRule: public std::runtime_error {
public:
  NoForwardRule(): std::runtime_error("no forward rule") {}
};

// Candidate reactant sets for `product`, at most k. A template with support s
// that yields d distinct outcomes scores s / (S * d) for each, where S is the
// total support of templates yielding any outcome; scores therefore sum to
// at most 1. Duplicate reactant sets keep their best score. Ordered by score
// descending, then key. Empty when nothing applies.
std::vector<Prediction> predict_retro_topk(const Molecule &product, int k,
                                           const RetroLibrary &lib);

// Top-1 product: the highest-support applicable template, ties broken by the
// smaller canonical product SMILES. The score is that template's share of the
// support of all applicable templates. Throws NoForwardRule when no template
// applies.
Prediction predict_forward(const std::vector<Molecule> &reactants,
                           const ForwardLibrary &lib);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_PREDICT_H_
