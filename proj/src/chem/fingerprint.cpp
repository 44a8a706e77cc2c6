//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/chem/fingerprint.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace roundtrip {

std::uint64_t fnv1a64(std::span<const std::int64_t> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : values) {
    auto u = static_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (u >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

BitFingerprint::BitFingerprint(int width, int radius)
    : width_(width), radius_(radius) {
  if (width <= 0 || !std::has_single_bit(static_cast<unsigned>(width))) {
    throw std::invalid_argument("fingerprint width must be a power of two");
  }
  if (radius < 0) throw std::invalid_argument("negative fingerprint radius");
  words_.assign((width + 63) / 64, 0);
}

int BitFingerprint::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> BitFingerprint::on_bits() const {
  std::vector<int> bits;
  for (int i = 0; i < width_; ++i) {
    if (test(i)) bits.push_back(i);
  }
  return bits;
}

BitFingerprint fingerprint(const Molecule &mol, int radius, int width) {
  BitFingerprint fp(width, radius);
  const int n = mol.num_atoms();
  const std::vector<bool> in_ring = ring_atoms(mol);
  const auto fold = [&](std::uint64_t h) {
    fp.set(static_cast<int>(h % static_cast<std::uint64_t>(width)));
  };

  std::vector<std::uint64_t> current(n);
  for (int i = 0; i < n; ++i) {
    const Atom &a = mol.atom(i);
    std::int64_t heavy_degree = 0;
    for (const Neighbor &nb : mol.neighbors(i)) {
      if (mol.atom(nb.atom).element != 1) ++heavy_degree;
    }
    const std::int64_t tuple[] = {a.element,         heavy_degree,
                                  a.hydrogens,       a.charge,
                                  a.aromatic ? 1 : 0, in_ring[i] ? 1 : 0};
    current[i] = fnv1a64(tuple);
    fold(current[i]);
  }

  std::vector<std::uint64_t> next(n);
  std::vector<std::pair<std::int64_t, std::uint64_t>> env;
  std::vector<std::int64_t> buffer;
  for (int r = 1; r <= radius; ++r) {
    for (int i = 0; i < n; ++i) {
      env.clear();
      for (const Neighbor &nb : mol.neighbors(i)) {
        env.emplace_back(static_cast<std::int64_t>(nb.order), current[nb.atom]);
      }
      std::sort(env.begin(), env.end());
      buffer.clear();
      buffer.push_back(r);
      buffer.push_back(static_cast<std::int64_t>(current[i]));
      for (const auto &[code, h] : env) {
        buffer.push_back(code);
        buffer.push_back(static_cast<std::int64_t>(h));
      }
      next[i] = fnv1a64(buffer);
      fold(next[i]);
    }
    std::swap(current, next);
  }
  return fp;
}

double tanimoto(const BitFingerprint &a, const BitFingerprint &b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("tanimoto on fingerprints of different width");
  }
  int both = 0, any = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    both += std::popcount(a.words()[i] & b.words()[i]);
    any += std::popcount(a.words()[i] | b.words()[i]);
  }
  if (any == 0) return 1.0;
  return static_cast<double>(both) / static_cast<double>(any);
}

}  // namespace roundtrip
