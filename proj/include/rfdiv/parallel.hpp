#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rfdiv {

/// Runs body(i) for i in [0, count) on `jobs` threads. Results must be written to
/// per-index slots; if any call throws, the exception of the smallest index is
/// rethrown after all workers finish, so failures do not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::exception_ptr> errors(count);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 16;
    auto worker = [&] {
      for (;;) {
        const std::size_t start = next.fetch_add(kChunk);
        if (start >= count) return;
        const std::size_t stop = std::min(count, start + kChunk);
        for (std::size_t i = start; i < stop; ++i) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace rfdiv
