//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/pattern.h"

#include <cctype>
#include <charconv>
#include <numeric>

#include "roundtrip/chem/element.h"
#include "roundtrip/chem/smiles.h"
#include "roundtrip/chem/smiles_syntax.h"

namespace roundtrip {

bool atom_matches(const PatternAtom &pattern, const Atom &atom) {
  return pattern.element == atom.element && pattern.aromatic == atom.aromatic &&
         pattern.charge == atom.charge &&
         (!pattern.hydrogens || *pattern.hydrogens == atom.hydrogens);
}

namespace {

std::string atom_text(const PatternAtom &a) {
  std::string symbol(element_symbol(a.element));
  if (a.aromatic) {
    for (char &ch : symbol) ch = static_cast<char>(std::tolower(ch));
  }
  std::string s = "[" + symbol;
  if (a.hydrogens) s += ";H" + std::to_string(*a.hydrogens);
  s += a.charge < 0 ? ";-" : ";+";
  s += std::to_string(a.charge < 0 ? -a.charge : a.charge);
  if (a.label != 0) s += ":" + std::to_string(a.label);
  return s + "]";
}

char bond_symbol(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
    return '-';
  case BondOrder::kDouble:
    return '=';
  case BondOrder::kTriple:
    return '#';
  case BondOrder::kAromatic:
    return ':';
  }
  return '-';
}

std::vector<std::string> pattern_parts(const Pattern &p) {
  std::vector<std::vector<internal::WriterArc>> adj(p.atoms.size());
  for (std::size_t e = 0; e < p.bonds.size(); ++e) {
    adj[p.bonds[e].begin].push_back({p.bonds[e].end, static_cast<int>(e)});
    adj[p.bonds[e].end].push_back({p.bonds[e].begin, static_cast<int>(e)});
  }
  std::vector<int> rank(p.atoms.size());
  std::iota(rank.begin(), rank.end(), 0);
  return internal::write_components(
      adj, rank, [&](int i) { return atom_text(p.atoms[i]); },
      [&](int e, int, int) { return std::string(1, bond_symbol(p.bonds[e].order)); });
}

int read_int(std::string_view s, std::size_t &i) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
  if (ec != std::errc()) return -1;
  i = static_cast<std::size_t>(end - s.data());
  return value;
}

PatternAtom parse_atom(const internal::RawAtom &raw, std::string_view text) {
  const std::string_view body = raw.text;
  auto fail = [&](ParseErrorKind kind) {
    return ParseError(kind, raw.position, text);
  };
  if (!raw.bracket || body.empty()) throw fail(ParseErrorKind::kBadBracketAtom);

  PatternAtom atom;
  std::size_t i = 0;
  while (i < body.size() && std::isalpha(static_cast<unsigned char>(body[i]))) ++i;
  std::string symbol(body.substr(0, i));
  if (symbol.empty()) throw fail(ParseErrorKind::kUnknownElement);
  atom.aromatic = std::islower(static_cast<unsigned char>(symbol[0])) != 0;
  symbol[0] = static_cast<char>(std::toupper(symbol[0]));
  atom.element = atomic_number(symbol);
  if (atom.element == 0 || (atom.aromatic && !can_be_aromatic(atom.element))) {
    throw fail(ParseErrorKind::kUnknownElement);
  }

  bool have_charge = false;
  while (i < body.size()) {
    const char c = body[i];
    if (c == ':') {
      ++i;
      atom.label = read_int(body, i);
      if (atom.label <= 0 || i != body.size()) throw fail(ParseErrorKind::kBadBracketAtom);
    } else if (c == ';' && i + 1 < body.size()) {
      const char kind = body[i + 1];
      i += 2;
      const int value = read_int(body, i);
      if (value < 0) throw fail(ParseErrorKind::kBadBracketAtom);
      if (kind == 'H') {
        atom.hydrogens = value;
      } else if (kind == '+' || kind == '-') {
        atom.charge = kind == '+' ? value : -value;
        have_charge = true;
      } else {
        throw fail(ParseErrorKind::kBadChargeSyntax);
      }
    } else {
      throw fail(ParseErrorKind::kBadBracketAtom);
    }
  }
  if (!have_charge) throw fail(ParseErrorKind::kBadChargeSyntax);
  return atom;
}

BondOrder parse_bond(const internal::RawBond &raw, std::string_view text) {
  switch (raw.symbol) {
  case '-':
    return BondOrder::kSingle;
  case '=':
    return BondOrder::kDouble;
  case '#':
    return BondOrder::kTriple;
  case ':':
    return BondOrder::kAromatic;
  default:
    throw ParseError(ParseErrorKind::kUnexpectedCharacter, raw.position, text);
  }
}

}  // namespace

std::string write_pattern(const Pattern &pattern) {
  const std::vector<std::string> parts = pattern_parts(pattern);
  if (parts.size() == 1) return parts[0];
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) s += '.';
    s += parts[k];
  }
  return s + ")";
}

std::string write_patterns(const std::vector<Pattern> &patterns) {
  std::string s;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (k > 0) s += '.';
    s += write_pattern(patterns[k]);
  }
  return s;
}

std::vector<Pattern> parse_patterns(std::string_view text) {
  const internal::RawGraph g = internal::parse_syntax(text, true);
  std::vector<Pattern> out(g.num_fragments);
  std::vector<int> local(g.atoms.size());
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    Pattern &p = out[g.atoms[i].fragment];
    local[i] = p.num_atoms();
    p.atoms.push_back(parse_atom(g.atoms[i], text));
  }
  for (const internal::RawBond &b : g.bonds) {
    Pattern &p = out[g.atoms[b.a].fragment];
    p.bonds.push_back({local[b.a], local[b.b], parse_bond(b, text)});
  }
  return out;
}

Pattern parse_pattern(std::string_view text) {
  std::vector<Pattern> parts = parse_patterns(text);
  if (parts.size() != 1) {
    throw ParseError(ParseErrorKind::kMultipleComponents, 0, text);
  }
  return std::move(parts[0]);
}

}  // namespace roundtrip
