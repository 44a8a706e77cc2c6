//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CHEM_FINGERPRINT_H_
#define ROUNDTRIP_CHEM_FINGERPRINT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "roundtrip/chem/molecule.h"

namespace roundtrip {

inline constexpr int kDefaultFingerprintRadius = 2;
inline constexpr int kDefaultFingerprintWidth = 2048;

// 64-bit FNV-1a over the little-endian bytes of each value in turn.
std::uint64_t fnv1a64(std::span<const std::int64_t> values);

class BitFingerprint {
public:
  // Throws std::invalid_argument unless width is a positive power of two.
  BitFingerprint(int width, int radius);

  int width() const { return width_; }
  int radius() const { return radius_; }

  void set(int bit) { words_[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  bool test(int bit) const { return (words_[bit >> 6] >> (bit & 63)) & 1u; }
  int count() const;
  std::vector<int> on_bits() const;
  const std::vector<std::uint64_t> &words() const { return words_; }

  bool operator==(const BitFingerprint &other) const = default;

private:
  int width_;
  int radius_;
  std::vector<std::uint64_t> words_;
};

// Circular (ECFP-style) fingerprint.
//
// Round 0 hashes, per atom, the tuple
//   (atomic number, heavy-atom degree, hydrogens, formal charge,
//    aromatic ? 1 : 0, in ring ? 1 : 0).
// Round r (1..radius) hashes
//   (r, previous hash, then each neighbor's (bond code, previous hash)
//    pair, pairs sorted ascending),
// with bond codes 1/2/3 for single/double/triple and 4 for aromatic. Every
// hash of every round sets bit (hash mod width). All hashes are fnv1a64.
BitFingerprint fingerprint(const Molecule &mol,
                           int radius = kDefaultFingerprintRadius,
                           int width = kDefaultFingerprintWidth);

// |a & b| / |a | b|; 1.0 when both are empty. Throws std::invalid_argument on
// a width mismatch.
double tanimoto(const BitFingerprint &a, const BitFingerprint &b);

}  // namespace roundtrip

#endif  // ROUNDTRIP_CHEM_FINGERPRINT_H_
