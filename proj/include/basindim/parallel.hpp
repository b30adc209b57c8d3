#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace basindim {

/// Runs body(k) for k in [0, count) on `workers` threads, handing out
/// contiguous chunks from a shared counter. Callers write results only to
/// slot k, so the output never depends on the worker count or scheduling.
/// The first exception thrown by any worker is rethrown after all join.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body, std::size_t chunk = 64) {
  if (count == 0) return;
  workers = std::max(1, workers);
  if (workers == 1 || count <= chunk) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    try {
      while (true) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= count) return;
        const std::size_t end = std::min(count, begin + chunk);
        for (std::size_t k = begin; k < end; ++k) body(k);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers - 1));
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace basindim
