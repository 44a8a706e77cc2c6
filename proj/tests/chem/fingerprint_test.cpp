//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/chem/fingerprint.h"

#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "roundtrip/chem/smiles.h"
#include "support/corpus.h"
#include "support/fingerprint_oracle.h"

namespace roundtrip {
namespace {

using testing::FingerprintOracle;

std::set<int> as_set(const BitFingerprint &fp) {
  std::vector<int> bits = fp.on_bits();
  return {bits.begin(), bits.end()};
}

TEST(FingerprintTest, Deterministic) {
  Molecule m = parse_smiles("CC(=O)Nc1ccc(O)cc1");
  EXPECT_EQ(fingerprint(m, 2, 2048), fingerprint(m, 2, 2048));
}

TEST(FingerprintTest, MethaneRadiusZeroHasOneBit) {
  EXPECT_EQ(fingerprint(parse_smiles("C"), 0, 2048).count(), 1);
}

TEST(FingerprintTest, ButaneMatchesOracle) {
  Molecule butane = parse_smiles("CCCC");
  EXPECT_EQ(as_set(fingerprint(butane, 1, 2048)), FingerprintOracle::bits(butane, 1, 2048));
}

TEST(FingerprintTest, CorpusMatchesOracle) {
  for (const Molecule &m : testing::molecule_corpus(120, 31)) {
    EXPECT_EQ(as_set(fingerprint(m, 2, 2048)), FingerprintOracle::bits(m, 2, 2048))
        << canonical_smiles(m);
  }
}

TEST(FingerprintTest, FnvReferenceValue) {
  // FNV-1a 64 of eight zero bytes.
  const std::int64_t zero[] = {0};
  EXPECT_EQ(fnv1a64(zero), FingerprintOracle::hash({0}));
  EXPECT_EQ(fnv1a64({}), 14695981039346656037ULL);
}

TEST(FingerprintTest, InvariantUnderRenumbering) {
  std::mt19937_64 rng(2);
  for (const Molecule &m : testing::molecule_corpus(80, 41)) {
    std::vector<int> perm = testing::random_permutation(rng, m.num_atoms());
    EXPECT_EQ(fingerprint(m), fingerprint(m.renumbered(perm)));
  }
}

TEST(FingerprintTest, WidthMustBePowerOfTwo) {
  EXPECT_THROW(BitFingerprint(1000, 2), std::invalid_argument);
  EXPECT_THROW(BitFingerprint(0, 2), std::invalid_argument);
  EXPECT_NO_THROW(BitFingerprint(1024, 0));
}

TEST(TanimotoTest, Definition) {
  BitFingerprint a(64, 0), b(64, 0);
  for (int bit : {1, 2, 3}) a.set(bit);
  for (int bit : {2, 3, 4}) b.set(bit);
  EXPECT_DOUBLE_EQ(tanimoto(a, b), 0.5);
  EXPECT_DOUBLE_EQ(tanimoto(a, a), 1.0);

  BitFingerprint c(64, 0);
  c.set(10);
  EXPECT_DOUBLE_EQ(tanimoto(a, c), 0.0);

  BitFingerprint empty1(64, 0), empty2(64, 0);
  EXPECT_DOUBLE_EQ(tanimoto(empty1, empty2), 1.0);

  EXPECT_THROW(tanimoto(a, BitFingerprint(128, 0)), std::invalid_argument);
}

TEST(TanimotoTest, SymmetricReflexiveBounded) {
  std::vector<BitFingerprint> fps;
  for (const Molecule &m : testing::molecule_corpus(60, 43)) fps.push_back(fingerprint(m));
  for (std::size_t i = 0; i < fps.size(); ++i) {
    EXPECT_DOUBLE_EQ(tanimoto(fps[i], fps[i]), 1.0);
    for (std::size_t j = 0; j < fps.size(); ++j) {
      const double s = tanimoto(fps[i], fps[j]);
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
      EXPECT_DOUBLE_EQ(s, tanimoto(fps[j], fps[i]));
    }
  }
}

}  // namespace
}  // namespace roundtrip
