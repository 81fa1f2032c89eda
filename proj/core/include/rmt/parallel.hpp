#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace rmt {

/// Seed used whenever the caller does not provide one.
inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Engine used for every Monte Carlo stream.
using Rng = std::mt19937_64;

/// Independent stream for draw `index` of a batch seeded with `seed`.
/// The stream depends only on (seed, index), never on the thread that runs it.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// 0 means "auto" (hardware concurrency, at least 1).
unsigned resolve_threads(unsigned requested);

/// Calls body(i) for i in [0, count) on up to `threads` workers.
/// Work is split into contiguous blocks; the first exception thrown is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_threads(threads), count == 0 ? 1 : count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rmt
