#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace momentforge {

/// 0 means "automatic": MOMENTFORGE_THREADS if set, else the hardware count.
unsigned resolve_thread_count(unsigned requested = 0);

/// Evaluates fn(chunk) for chunk in [0, chunks) on up to `threads` workers and
/// folds the results with merge() in chunk order, so the outcome never depends
/// on scheduling.
template <class Result, class Fn, class Merge>
Result parallel_map_reduce(std::size_t chunks, unsigned threads, Fn&& fn, Merge&& merge, Result init) {
  std::vector<Result> partial(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        partial[c] = fn(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(resolve_thread_count(threads), static_cast<unsigned>(chunks)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  for (auto& p : partial) merge(init, std::move(p));
  return init;
}

}  // namespace momentforge
