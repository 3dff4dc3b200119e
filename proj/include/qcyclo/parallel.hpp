#pragma once

// Order-preserving parallel map over an index range. The worker count is
// std::thread::hardware_concurrency(), capped by the QCYCLO_THREADS variable
// when set. Results land at their own index, so output never depends on
// scheduling; the first exception thrown by any task is rethrown.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace qcyclo {

inline unsigned worker_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QCYCLO_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Unparseable values are ignored.
    }
  }
  return n;
}

template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(count);
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_guard;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_guard);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace qcyclo
