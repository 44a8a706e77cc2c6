//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_TEMPLATE_H_
#define ROUNDTRIP_TEMPLATES_TEMPLATE_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "roundtrip/templates/pattern.h"

namespace roundtrip {

enum class Direction { kRetro, kForward };

std::string_view to_string(Direction direction);
// Throws std::invalid_argument for anything but "retro" or "forward".
Direction direction_from_string(std::string_view text);

// A graph-rewrite rule between one product pattern and one pattern per
// reactant. Labeled atoms correspond across the two sides; unlabeled atoms
// are created or deleted by the rewrite.
struct ReactionTemplate {
  Pattern product;
  std::vector<Pattern> reactants;
  int radius = 1;
  int support = 0;
  int id = 0;

  // "product>>reactants" in pattern text. Equal for isomorphic templates
  // once canonicalized.
  std::string key() const;
};

struct RetroTemplate: ReactionTemplate {
  static constexpr Direction kDirection = Direction::kRetro;
};

struct ForwardTemplate: ReactionTemplate {
  static constexpr Direction kDirection = Direction::kForward;
};

class TemplateError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Throws TemplateError unless every label occurs exactly once per side and
// the product pattern is non-empty.
void validate_template(const ReactionTemplate &t);

// Reorders atoms and reactant patterns into a canonical order and renumbers
// labels 1..n in product atom order, so isomorphic templates become equal.
ReactionTemplate canonicalize_template(const ReactionTemplate &t);

// Pattern text in the library's direction: "product>>reactants" for retro,
// "reactants>>product" for forward.
std::string template_text(const ReactionTemplate &t, Direction direction);
// Inverse of template_text; radius, support and id are left at defaults.
ReactionTemplate parse_template_text(std::string_view text, Direction direction);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_TEMPLATE_H_
