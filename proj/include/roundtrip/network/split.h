//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_NETWORK_SPLIT_H_
#define ROUNDTRIP_NETWORK_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace roundtrip {

struct SplitRatios {
  double train = 98.0;
  double validation = 1.0;
  double test = 1.0;
};

struct SplitCounts {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

// validation = round(n * validation%), test = round(n * test%), train takes
// the rest. Throws std::invalid_argument unless the ratios are non-negative
// and sum to 100, or when n is smaller than the number of non-empty buckets.
SplitCounts split_counts(std::size_t n, const SplitRatios &ratios);

// Bucket of each item (0 train, 1 validation, 2 test) after a seeded
// Fisher-Yates shuffle; identical seeds give identical assignments.
// Throws std::invalid_argument when the counts do not add up to n.
std::vector<int> split_assignment(std::size_t n, const SplitCounts &counts, std::uint64_t seed);

template <typename T>
struct DatasetSplit {
  std::vector<T> train;
  std::vector<T> validation;
  std::vector<T> test;
};

// Items are whole targets (with all their routes), so a target never spans
// buckets. Items keep their input order within a bucket.
template <typename T>
DatasetSplit<T> split_dataset(const std::vector<T> &items, const SplitCounts &counts,
                              std::uint64_t seed) {
  const std::vector<int> bucket = split_assignment(items.size(), counts, seed);
  DatasetSplit<T> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (bucket[i] == 0 ? out.train : bucket[i] == 1 ? out.validation : out.test).push_back(items[i]);
  }
  return out;
}

template <typename T>
DatasetSplit<T> split_dataset(const std::vector<T> &items, const SplitRatios &ratios,
                              std::uint64_t seed) {
  return split_dataset(items, split_counts(items.size(), ratios), seed);
}

}  // namespace roundtrip

#endif  // ROUNDTRIP_NETWORK_SPLIT_H_
