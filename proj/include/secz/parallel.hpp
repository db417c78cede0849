#pragma once

// Deterministic chunked execution. Work is split into a fixed, worker-count
// independent set of chunks; each chunk's result lands in its own slot and
// callers combine the slots in index order. Workers inherit the caller's
// working precision.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "secz/real.hpp"

namespace secz {

/// Terms per accumulation chunk.
inline constexpr std::size_t kChunkSize = 4096;

/// Requested worker count; 0 means one per hardware thread.
struct Parallelism {
  unsigned workers = 0;

  unsigned resolved() const noexcept {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
  }
};

inline std::size_t chunk_count(std::size_t items, std::size_t chunk = kChunkSize) {
  return (items + chunk - 1) / chunk;
}

/// Calls `task(i)` for every i in [0, count) across workers and stores the
/// results by index. The exception of the lowest failing index is rethrown.
template <class Result, class Task>
std::vector<Result> parallel_map(std::size_t count, Parallelism parallelism, Task task) {
  std::vector<Result> results(count);
  if (count == 0) return results;
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(parallelism.resolved(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }

  const precision_t bits = working_precision();
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;

  auto worker = [&] {
    PrecisionScope scope(bits);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace secz
