//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/chem/smiles.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roundtrip/chem/canon.h"
#include "roundtrip/chem/element.h"
#include "roundtrip/chem/smiles_syntax.h"

namespace roundtrip {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
  case ParseErrorKind::kEmptyInput:
    return "empty input";
  case ParseErrorKind::kUnclosedRingBond:
    return "unclosed ring bond";
  case ParseErrorKind::kUnbalancedParenthesis:
    return "unbalanced parenthesis";
  case ParseErrorKind::kUnknownElement:
    return "unknown element";
  case ParseErrorKind::kBadChargeSyntax:
    return "bad charge syntax";
  case ParseErrorKind::kBadBracketAtom:
    return "malformed bracket atom";
  case ParseErrorKind::kRingBondMismatch:
    return "conflicting ring bond symbols";
  case ParseErrorKind::kUnexpectedCharacter:
    return "unexpected character";
  case ParseErrorKind::kMultipleComponents:
    return "multiple components";
  }
  return "unknown";
}

namespace {

std::string format_error(ParseErrorKind kind, std::size_t position,
                         std::string_view text) {
  std::string msg(to_string(kind));
  msg += " at position ";
  msg += std::to_string(position);
  msg += " in \"";
  msg += text;
  msg += '"';
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t position,
                       std::string_view text)
    : std::runtime_error(format_error(kind, position, text)), kind_(kind),
      position_(position) { }

namespace internal {
namespace {

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '/' ||
         c == '\\';
}

// Length of an organic-subset token at text[i], or 0.
std::size_t organic_token_length(std::string_view text, std::size_t i) {
  const char c = text[i];
  const char next = i + 1 < text.size() ? text[i + 1] : '\0';
  if (c == 'C' && next == 'l') return 2;
  if (c == 'B' && next == 'r') return 2;
  switch (c) {
  case 'B':
  case 'C':
  case 'N':
  case 'O':
  case 'P':
  case 'S':
  case 'F':
  case 'I':
  case 'b':
  case 'c':
  case 'n':
  case 'o':
  case 'p':
  case 's':
    return 1;
  default:
    return 0;
  }
}

struct OpenRing {
  int atom;
  char symbol;
  std::size_t position;
};

struct StackEntry {
  bool group;
  int atom;
  std::size_t position;
};

}  // namespace

RawGraph parse_syntax(std::string_view text, bool allow_groups) {
  if (text.empty()) throw ParseError(ParseErrorKind::kEmptyInput, 0, text);

  RawGraph g;
  std::map<int, OpenRing> rings;
  std::vector<StackEntry> stack;
  int prev = -1;
  char pending_bond = 0;
  std::size_t pending_pos = 0;
  int component = 0;
  int fragment = 0;
  bool in_group = false;
  bool group_closed = false;  // just saw the ')' of a component group

  auto fail = [&](ParseErrorKind kind, std::size_t pos) -> ParseError {
    return ParseError(kind, std::min(pos, text.size() - 1), text);
  };

  auto add_atom = [&](std::string_view token, std::size_t pos, bool bracket) {
    if (group_closed) throw fail(ParseErrorKind::kUnexpectedCharacter, pos);
    const int idx = static_cast<int>(g.atoms.size());
    g.atoms.push_back({token, pos, bracket, component, fragment});
    if (prev >= 0) {
      g.bonds.push_back({prev, idx, pending_bond, pending_pos});
    } else if (pending_bond != 0) {
      throw fail(ParseErrorKind::kUnexpectedCharacter, pending_pos);
    }
    pending_bond = 0;
    prev = idx;
  };

  auto ring_closure = [&](int number, std::size_t pos) {
    if (prev < 0) throw fail(ParseErrorKind::kUnexpectedCharacter, pos);
    auto it = rings.find(number);
    if (it == rings.end()) {
      rings.emplace(number, OpenRing{prev, pending_bond, pos});
    } else {
      const OpenRing open = it->second;
      rings.erase(it);
      if (open.atom == prev) {
        throw fail(ParseErrorKind::kUnexpectedCharacter, pos);
      }
      char symbol = open.symbol;
      if (pending_bond != 0) {
        if (symbol != 0 && symbol != pending_bond) {
          throw fail(ParseErrorKind::kRingBondMismatch, pos);
        }
        symbol = pending_bond;
      }
      for (const RawBond &b : g.bonds) {
        if ((b.a == open.atom && b.b == prev) ||
            (b.a == prev && b.b == open.atom)) {
          throw fail(ParseErrorKind::kUnexpectedCharacter, pos);
        }
      }
      g.bonds.push_back({open.atom, prev, symbol, pos});
    }
    pending_bond = 0;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '[') {
      const std::size_t close = text.find(']', i + 1);
      if (close == std::string_view::npos) {
        throw fail(ParseErrorKind::kBadBracketAtom, i);
      }
      add_atom(text.substr(i + 1, close - i - 1), i, true);
      i = close + 1;
    } else if (std::size_t len = organic_token_length(text, i); len > 0) {
      add_atom(text.substr(i, len), i, false);
      i += len;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      ring_closure(c - '0', i);
      ++i;
    } else if (c == '%') {
      if (i + 2 >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[i + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text[i + 2]))) {
        throw fail(ParseErrorKind::kUnexpectedCharacter, i);
      }
      ring_closure((text[i + 1] - '0') * 10 + (text[i + 2] - '0'), i);
      i += 3;
    } else if (is_bond_char(c)) {
      if (pending_bond != 0 || prev < 0) {
        throw fail(ParseErrorKind::kUnexpectedCharacter, i);
      }
      pending_bond = (c == '/' || c == '\\') ? '-' : c;
      pending_pos = i;
      ++i;
    } else if (c == '(') {
      if (prev < 0) {
        if (!allow_groups || in_group || group_closed) {
          throw fail(ParseErrorKind::kUnexpectedCharacter, i);
        }
        stack.push_back({true, -1, i});
        in_group = true;
      } else {
        if (pending_bond != 0) {
          throw fail(ParseErrorKind::kUnexpectedCharacter, i);
        }
        stack.push_back({false, prev, i});
      }
      ++i;
    } else if (c == ')') {
      if (stack.empty()) throw fail(ParseErrorKind::kUnbalancedParenthesis, i);
      if (pending_bond != 0 || prev < 0) {
        throw fail(ParseErrorKind::kUnexpectedCharacter, i);
      }
      const StackEntry top = stack.back();
      stack.pop_back();
      if (top.group) {
        in_group = false;
        group_closed = true;
        prev = -1;
      } else {
        prev = top.atom;
      }
      ++i;
    } else if (c == '.') {
      if (pending_bond != 0 || (prev < 0 && !group_closed)) {
        throw fail(ParseErrorKind::kUnexpectedCharacter, i);
      }
      if (!stack.empty() && !stack.back().group) {
        throw fail(ParseErrorKind::kUnbalancedParenthesis, stack.back().position);
      }
      if (g.first_dot == std::string_view::npos && !in_group) g.first_dot = i;
      ++component;
      if (!in_group) ++fragment;
      group_closed = false;
      prev = -1;
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '*') {
      throw fail(ParseErrorKind::kUnknownElement, i);
    } else {
      throw fail(ParseErrorKind::kUnexpectedCharacter, i);
    }
  }

  if (!stack.empty()) {
    throw fail(ParseErrorKind::kUnbalancedParenthesis, stack.back().position);
  }
  if (!rings.empty()) {
    throw fail(ParseErrorKind::kUnclosedRingBond, rings.begin()->second.position);
  }
  if (pending_bond != 0 || (prev < 0 && !group_closed)) {
    throw fail(ParseErrorKind::kUnexpectedCharacter, text.size() - 1);
  }
  g.num_components = component + 1;
  g.num_fragments = fragment + 1;
  return g;
}

std::vector<std::string>
write_components(const std::vector<std::vector<WriterArc>> &adjacency,
                 std::span<const int> rank, const AtomTextFn &atom_text,
                 const BondTextFn &bond_text) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<std::vector<WriterArc>> adj = adjacency;
  for (auto &arcs : adj) {
    std::sort(arcs.begin(), arcs.end(), [&](const WriterArc &x, const WriterArc &y) {
      return rank[x.to] < rank[y.to];
    });
  }

  std::vector<int> order(n, -1);
  std::vector<std::vector<WriterArc>> children(n);
  // Ring bond endpoints: (partner, edge); the lower DFS order opens.
  std::vector<std::vector<WriterArc>> ring_events(n);
  std::vector<bool> edge_seen;
  int max_edge = -1;
  for (const auto &arcs : adj) {
    for (const WriterArc &a : arcs) max_edge = std::max(max_edge, a.edge);
  }
  edge_seen.assign(max_edge + 1, false);

  int counter = 0;
  std::function<void(int)> explore = [&](int v) {
    order[v] = counter++;
    for (const WriterArc &a : adj[v]) {
      if (edge_seen[a.edge]) continue;
      edge_seen[a.edge] = true;
      if (order[a.to] < 0) {
        children[v].push_back(a);
        explore(a.to);
      } else {
        ring_events[v].push_back(a);
        ring_events[a.to].push_back({v, a.edge});
      }
    }
  };

  std::vector<int> by_rank(n);
  for (int v = 0; v < n; ++v) by_rank[rank[v]] = v;

  std::vector<std::string> out;
  for (int start : by_rank) {
    if (order[start] >= 0) continue;
    explore(start);

    std::string s;
    std::map<int, int> open_digit;  // edge -> digit
    std::vector<bool> digit_used(100, false);

    std::function<void(int)> emit = [&](int v) {
      s += atom_text(v);
      std::vector<WriterArc> events = ring_events[v];
      std::sort(events.begin(), events.end(), [&](const WriterArc &x, const WriterArc &y) {
        return order[x.to] < order[y.to];
      });
      for (const WriterArc &e : events) {
        auto it = open_digit.find(e.edge);
        int digit;
        if (it != open_digit.end()) {
          digit = it->second;
          open_digit.erase(it);
          digit_used[digit] = false;
        } else {
          digit = 1;
          while (digit_used[digit]) ++digit;
          digit_used[digit] = true;
          open_digit[e.edge] = digit;
          s += bond_text(e.edge, v, e.to);
        }
        if (digit < 10) {
          s += static_cast<char>('0' + digit);
        } else {
          s += '%';
          s += std::to_string(digit);
        }
      }
      for (std::size_t k = 0; k < children[v].size(); ++k) {
        const WriterArc &c = children[v][k];
        const bool last = k + 1 == children[v].size();
        if (!last) s += '(';
        s += bond_text(c.edge, v, c.to);
        emit(c.to);
        if (!last) s += ')';
      }
    };
    emit(start);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace internal

namespace {

int parse_int(std::string_view s, std::size_t &i) {
  int value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i] - '0');
    ++i;
  }
  return value;
}

Atom parse_bracket(std::string_view body, std::size_t pos,
                   std::string_view text) {
  // pos is the offset of '['; body starts at pos + 1.
  auto fail = [&](ParseErrorKind kind, std::size_t at) {
    return ParseError(kind, pos + 1 + std::min(at, body.empty() ? 0 : body.size() - 1),
                      text);
  };
  Atom atom;
  std::size_t i = 0;
  while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
    ++i;  // isotope, discarded
  }
  if (i >= body.size()) throw fail(ParseErrorKind::kBadBracketAtom, i);

  // Element symbol, aromatic forms first.
  if (body.compare(i, 2, "se") == 0 || body.compare(i, 2, "as") == 0) {
    atom.element = atomic_number(body[i] == 's' ? "Se" : "As");
    atom.aromatic = true;
    i += 2;
  } else if (std::islower(static_cast<unsigned char>(body[i]))) {
    const char upper = static_cast<char>(std::toupper(body[i]));
    const int z = atomic_number(std::string_view(&upper, 1));
    if (z == 0 || !can_be_aromatic(z)) {
      throw fail(ParseErrorKind::kUnknownElement, i);
    }
    atom.element = z;
    atom.aromatic = true;
    ++i;
  } else if (std::isupper(static_cast<unsigned char>(body[i]))) {
    int z = 0;
    if (i + 1 < body.size() && std::islower(static_cast<unsigned char>(body[i + 1]))) {
      z = atomic_number(body.substr(i, 2));
      if (z != 0) i += 2;
    }
    if (z == 0) {
      z = atomic_number(body.substr(i, 1));
      if (z == 0) throw fail(ParseErrorKind::kUnknownElement, i);
      ++i;
    }
    atom.element = z;
  } else {
    throw fail(ParseErrorKind::kUnknownElement, i);
  }

  // Chirality, discarded.
  if (i < body.size() && body[i] == '@') {
    ++i;
    if (i < body.size() && body[i] == '@') {
      ++i;
    } else {
      for (std::string_view cls : {"TH", "AL", "SP", "TB", "OH"}) {
        if (body.compare(i, 2, cls) == 0) {
          i += 2;
          parse_int(body, i);
          break;
        }
      }
    }
  }

  if (i < body.size() && body[i] == 'H') {
    ++i;
    atom.hydrogens = 1;
    if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      atom.hydrogens = parse_int(body, i);
    }
  }

  if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
    const char sign = body[i];
    const int unit = sign == '+' ? 1 : -1;
    ++i;
    if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      atom.charge = unit * parse_int(body, i);
    } else {
      int count = 1;
      while (i < body.size() && body[i] == sign) {
        ++count;
        ++i;
      }
      atom.charge = unit * count;
    }
    if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
      throw fail(ParseErrorKind::kBadChargeSyntax, i);
    }
  }

  if (i < body.size() && body[i] == ':') {
    ++i;
    if (i >= body.size() || !std::isdigit(static_cast<unsigned char>(body[i]))) {
      throw fail(ParseErrorKind::kBadBracketAtom, i);
    }
    atom.map_number = parse_int(body, i);
  }

  if (i != body.size()) {
    const char c = body[i];
    throw fail(c == '+' || c == '-' ? ParseErrorKind::kBadChargeSyntax
                                    : ParseErrorKind::kBadBracketAtom,
               i);
  }
  return atom;
}

Atom organic_atom(std::string_view token) {
  Atom atom;
  if (std::islower(static_cast<unsigned char>(token[0]))) {
    const char upper = static_cast<char>(std::toupper(token[0]));
    atom.element = atomic_number(std::string_view(&upper, 1));
    atom.aromatic = true;
  } else {
    atom.element = atomic_number(token);
  }
  return atom;
}

BondOrder bond_from_symbol(char symbol, const Atom &a, const Atom &b) {
  switch (symbol) {
  case '-':
    return BondOrder::kSingle;
  case '=':
    return BondOrder::kDouble;
  case '#':
    return BondOrder::kTriple;
  case ':':
    return BondOrder::kAromatic;
  default:
    return a.aromatic && b.aromatic ? BondOrder::kAromatic : BondOrder::kSingle;
  }
}

// Builds molecules from a syntax graph; one per component when split.
std::vector<Molecule> build(const internal::RawGraph &g, std::string_view text,
                            bool split) {
  const int n = static_cast<int>(g.atoms.size());
  std::vector<Atom> atoms(n);
  std::vector<bool> organic(n, false);
  for (int i = 0; i < n; ++i) {
    const internal::RawAtom &raw = g.atoms[i];
    if (raw.bracket) {
      atoms[i] = parse_bracket(raw.text, raw.position, text);
    } else {
      atoms[i] = organic_atom(raw.text);
      organic[i] = true;
    }
  }
  std::vector<Bond> bonds;
  bonds.reserve(g.bonds.size());
  std::vector<int> order_sum(n, 0);
  for (const internal::RawBond &rb : g.bonds) {
    const BondOrder order = bond_from_symbol(rb.symbol, atoms[rb.a], atoms[rb.b]);
    bonds.push_back({rb.a, rb.b, order});
    order_sum[rb.a] += valence_contribution(order);
    order_sum[rb.b] += valence_contribution(order);
  }
  for (int i = 0; i < n; ++i) {
    if (organic[i]) {
      atoms[i].hydrogens =
          implicit_hydrogens(atoms[i].element, atoms[i].aromatic, order_sum[i]);
    }
  }

  if (!split || g.num_components == 1) {
    return {Molecule(std::move(atoms), std::move(bonds))};
  }

  std::vector<std::vector<Atom>> comp_atoms(g.num_components);
  std::vector<std::vector<Bond>> comp_bonds(g.num_components);
  std::vector<int> local(n);
  for (int i = 0; i < n; ++i) {
    const int c = g.atoms[i].component;
    local[i] = static_cast<int>(comp_atoms[c].size());
    comp_atoms[c].push_back(atoms[i]);
  }
  for (const Bond &b : bonds) {
    const int c = g.atoms[b.begin].component;
    comp_bonds[c].push_back({local[b.begin], local[b.end], b.order});
  }
  std::vector<Molecule> out;
  out.reserve(g.num_components);
  for (int c = 0; c < g.num_components; ++c) {
    out.emplace_back(std::move(comp_atoms[c]), std::move(comp_bonds[c]));
  }
  return out;
}

std::string atom_text(const Atom &a, int bond_order_sum, bool with_map) {
  const int map = with_map ? a.map_number : 0;
  std::string symbol(element_symbol(a.element));
  if (a.aromatic) {
    for (char &ch : symbol) ch = static_cast<char>(std::tolower(ch));
  }
  const bool plain =
      is_organic_subset(a.element) && a.charge == 0 && map == 0 &&
      (!a.aromatic || can_be_aromatic(a.element)) &&
      a.hydrogens == implicit_hydrogens(a.element, a.aromatic, bond_order_sum);
  if (plain) return symbol;

  std::string s = "[" + symbol;
  if (a.hydrogens > 0) {
    s += 'H';
    if (a.hydrogens > 1) s += std::to_string(a.hydrogens);
  }
  if (a.charge != 0) {
    s += a.charge > 0 ? '+' : '-';
    const int mag = a.charge > 0 ? a.charge : -a.charge;
    if (mag > 1) s += std::to_string(mag);
  }
  if (map != 0) {
    s += ':';
    s += std::to_string(map);
  }
  s += ']';
  return s;
}

std::string bond_text(BondOrder order, bool both_aromatic) {
  switch (order) {
  case BondOrder::kSingle:
    return both_aromatic ? "-" : "";
  case BondOrder::kDouble:
    return "=";
  case BondOrder::kTriple:
    return "#";
  case BondOrder::kAromatic:
    return both_aromatic ? "" : ":";
  }
  return "";
}

std::string serialize(const std::vector<Atom> &atoms,
                      const std::vector<Bond> &bonds, std::span<const int> rank,
                      bool with_maps) {
  std::vector<std::vector<internal::WriterArc>> adj(atoms.size());
  std::vector<int> order_sum(atoms.size(), 0);
  for (std::size_t e = 0; e < bonds.size(); ++e) {
    const Bond &b = bonds[e];
    adj[b.begin].push_back({b.end, static_cast<int>(e)});
    adj[b.end].push_back({b.begin, static_cast<int>(e)});
    order_sum[b.begin] += valence_contribution(b.order);
    order_sum[b.end] += valence_contribution(b.order);
  }
  const std::vector<std::string> parts = internal::write_components(
      adj, rank,
      [&](int i) { return atom_text(atoms[i], order_sum[i], with_maps); },
      [&](int e, int from, int to) {
        return bond_text(bonds[e].order,
                         atoms[from].aromatic && atoms[to].aromatic);
      });
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += '.';
    out += parts[k];
  }
  return out;
}

}  // namespace

namespace internal {

std::pair<std::vector<int>, std::string>
canonicalize(const std::vector<Atom> &atoms, const std::vector<Bond> &bonds,
             const std::vector<std::vector<Neighbor>> &) {
  // Degree leads the color so traversal starts from a chain end.
  std::vector<std::uint64_t> degree(atoms.size(), 0);
  for (const Bond &b : bonds) {
    ++degree[b.begin];
    ++degree[b.end];
  }
  ColoredGraph g;
  g.colors.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom &a = atoms[i];
    const std::uint64_t h = static_cast<std::uint64_t>(std::min(a.hydrogens, 255));
    const std::uint64_t q = static_cast<std::uint64_t>(a.charge + 128) & 0xff;
    g.colors.push_back((std::min<std::uint64_t>(degree[i], 255) << 40) |
                       (static_cast<std::uint64_t>(a.element) << 24) | (q << 16) |
                       (h << 8) | (a.aromatic ? 1u : 0u));
  }
  g.edges.reserve(bonds.size());
  for (const Bond &b : bonds) {
    g.edges.push_back({b.begin, b.end, static_cast<int>(b.order)});
  }
  CanonicalLabeling labeling = canonical_labeling(g);
  std::string text = serialize(atoms, bonds, labeling.rank, false);
  return {std::move(labeling.rank), std::move(text)};
}

}  // namespace internal

Molecule parse_smiles(std::string_view text) {
  internal::RawGraph g = internal::parse_syntax(text, false);
  if (g.num_components > 1) {
    throw ParseError(ParseErrorKind::kMultipleComponents, g.first_dot, text);
  }
  return std::move(build(g, text, false).front());
}

std::vector<Molecule> parse_smiles_components(std::string_view text) {
  internal::RawGraph g = internal::parse_syntax(text, false);
  return build(g, text, true);
}

std::string canonical_smiles(const Molecule &mol) {
  return mol.canonical_smiles();
}

std::string write_smiles(const Molecule &mol, const SmilesWriteOptions &options) {
  if (options.canonical_order) {
    return serialize(mol.atoms(), mol.bonds(), mol.canonical_ranks(),
                     options.atom_maps);
  }
  std::vector<int> identity(mol.num_atoms());
  for (int i = 0; i < mol.num_atoms(); ++i) identity[i] = i;
  return serialize(mol.atoms(), mol.bonds(), identity, options.atom_maps);
}

}  // namespace roundtrip
