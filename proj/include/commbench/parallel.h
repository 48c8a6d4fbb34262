#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace commbench {

// Splits [0, n) into `jobs` contiguous chunks and runs body(chunk, begin, end)
// on each. Chunk boundaries depend only on n and jobs; callers merge
// per-chunk results in chunk order to stay independent of scheduling.
template <class Body>
void parallel_chunks(std::size_t n, int jobs, Body&& body) {
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Smallest index i in [0, n) with pred(i), or n if none.
template <class Pred>
std::size_t parallel_find_first(std::size_t n, int jobs, Pred&& pred) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return n;
  }
  std::vector<std::size_t> found(static_cast<std::size_t>(jobs), n);
  parallel_chunks(n, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (pred(i)) {
        found[chunk] = i;
        return;
      }
    }
  });
  return *std::min_element(found.begin(), found.end());
}

}  // namespace commbench
