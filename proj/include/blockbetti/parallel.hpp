#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace blockbetti {

/// Runs f(0..count-1) on up to `threads` workers. The first exception thrown by
/// any task is rethrown on the calling thread after all workers finish.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_guard;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          f(k);
        } catch (...) {
          std::lock_guard lock(error_guard);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace blockbetti
