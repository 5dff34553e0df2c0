#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace casent::detail {

// Strided index-parallel loop. Each worker writes results only at its own
// indices, so the outcome is identical for every thread count.
template <typename Fn>
void parallel_for_index(std::size_t n, int threads, Fn&& fn) {
  const int k = static_cast<int>(std::min<std::size_t>(std::max(threads, 1), n ? n : 1));
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(k);
  pool.reserve(k);
  for (int t = 0; t < k; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += k) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace casent::detail
