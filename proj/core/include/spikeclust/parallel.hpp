#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace spikeclust {

inline std::size_t chunk_count(std::size_t n, std::size_t chunk) {
  return chunk == 0 ? 0 : (n + chunk - 1) / chunk;
}

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// The chunk grid depends only on (n, chunk), never on the worker count, so
// per-chunk outputs plus a fixed-order reduction over chunk indices give
// bit-identical results for every thread count. Bodies must not throw.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t chunk, int threads, Fn&& fn) {
  if (n == 0) return;
  const std::size_t nchunks = chunk_count(n, chunk);
  auto run_chunk = [&](std::size_t c) {
    fn(c, c * chunk, std::min(n, (c + 1) * chunk));
  };
  if (threads <= 1 || nchunks <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      run_chunk(c);
    }
  };
  const std::size_t nworkers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), nchunks);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Convenience: per-row parallel loop with the default chunk size used across
// the library (fixed so results never depend on --threads).
inline constexpr std::size_t kRowChunk = 256;

template <typename Fn>
void parallel_rows(std::size_t n, int threads, Fn&& fn) {
  parallel_chunks(n, kRowChunk, threads,
                  [&](std::size_t, std::size_t b, std::size_t e) {
                    for (std::size_t i = b; i < e; ++i) fn(i);
                  });
}

}  // namespace spikeclust
