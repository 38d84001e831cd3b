#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace pentagon {

/// Worker count: PENTAGON_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
std::size_t thread_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(begin, end, chunk) on each. Returns the per-chunk results in chunk
/// order so reductions do not depend on scheduling.
template <class Result, class Body>
std::vector<Result> parallel_chunks(std::size_t n, Body body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(thread_count(), n / 64 + 1));
  std::vector<Result> results(workers);
  const std::size_t step = (n + workers - 1) / workers;
  if (workers == 1) {
    results[0] = body(std::size_t{0}, n, std::size_t{0});
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t c = 0; c < workers; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    pool.emplace_back([&results, &body, begin, end, c] { results[c] = body(begin, end, c); });
  }
  pool.clear();
  return results;
}

}  // namespace pentagon
