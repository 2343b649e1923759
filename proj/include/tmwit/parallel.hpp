#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace tmwit {

inline unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [first, last] into consecutive chunks of `chunk` values and calls
// body(chunk_index, lo, hi) for each, on up to `jobs` threads. Chunks are
// claimed in ascending order. If several chunks throw, the exception of the
// lowest chunk is rethrown, which is also what a sequential run reports, so
// results never depend on the thread count.
template <class Body>
void for_each_chunk(std::uint64_t first, std::uint64_t last, std::uint64_t chunk, unsigned jobs, Body&& body) {
  if (last < first) return;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t count = (last - first) / chunk + 1;
  jobs = std::max(1u, jobs);

  if (jobs == 1 || count == 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t lo = first + i * chunk;
      body(i, lo, std::min(last, lo + chunk - 1));
    }
    return;
  }

  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> first_failed{count};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count || i > first_failed.load()) return;
      const std::uint64_t lo = first + i * chunk;
      try {
        body(i, lo, std::min(last, lo + chunk - 1));
      } catch (...) {
        errors[i] = std::current_exception();
        std::uint64_t seen = first_failed.load();
        while (i < seen && !first_failed.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  pool.reserve(n);
  for (unsigned j = 0; j < n; ++j) pool.emplace_back(worker);
  pool.clear();

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace tmwit
