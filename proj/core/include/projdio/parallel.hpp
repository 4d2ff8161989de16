#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace projdio {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks; callers
// write results into preallocated slots indexed by i, so the outcome is
// independent of the thread count.
template <typename Fn>
void parallel_for(std::int64_t n, unsigned threads, const Fn& fn) {
  if (n <= 0) return;
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::int64_t>(resolve_threads(threads), n));
  if (nthreads <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::int64_t chunk = (n + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    const std::int64_t lo = static_cast<std::int64_t>(t) * chunk;
    const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace projdio
