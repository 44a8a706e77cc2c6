//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/network/split.h"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace roundtrip {

SplitCounts split_counts(std::size_t n, const SplitRatios &ratios) {
  if (ratios.train < 0 || ratios.validation < 0 || ratios.test < 0 ||
      std::abs(ratios.train + ratios.validation + ratios.test - 100.0) > 1e-9) {
    throw std::invalid_argument("split ratios must be non-negative and sum to 100");
  }
  const std::size_t buckets = (ratios.train > 0) + (ratios.validation > 0) + (ratios.test > 0);
  if (n < buckets) throw std::invalid_argument("fewer targets than split buckets");
  SplitCounts c;
  c.validation = static_cast<std::size_t>(std::llround(n * ratios.validation / 100.0));
  c.test = static_cast<std::size_t>(std::llround(n * ratios.test / 100.0));
  // Every requested bucket gets at least one item.
  if (ratios.validation > 0 && c.validation == 0) c.validation = 1;
  if (ratios.test > 0 && c.test == 0) c.test = 1;
  if (c.validation + c.test > n) throw std::invalid_argument("fewer targets than split buckets");
  c.train = n - c.validation - c.test;
  if (ratios.train > 0 && c.train == 0) throw std::invalid_argument("fewer targets than split buckets");
  return c;
}

std::vector<int> split_assignment(std::size_t n, const SplitCounts &counts, std::uint64_t seed) {
  if (counts.train + counts.validation + counts.test != n) {
    throw std::invalid_argument("split counts do not add up to the item count");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Explicit Fisher-Yates so the result does not depend on the standard
  // library's shuffle implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  std::vector<int> bucket(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    bucket[order[k]] = k < counts.train ? 0 : k < counts.train + counts.validation ? 1 : 2;
  }
  return bucket;
}

}  // namespace roundtrip
