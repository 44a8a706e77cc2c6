//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CLI_PARALLEL_H_
#define ROUNDTRIP_CLI_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace roundtrip::cli {

// Runs fn(i) for i in [0, n) on up to `jobs` worker threads. Results are
// stored by index, so the output order never depends on scheduling. The
// first exception thrown by any task is rethrown after all workers stop.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, int jobs, Fn fn) {
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  const auto worker = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace roundtrip::cli

#endif  // ROUNDTRIP_CLI_PARALLEL_H_
