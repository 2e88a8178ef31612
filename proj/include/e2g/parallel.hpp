#pragma once

// Minimal fork-join helper. Work is split into contiguous chunks so callers
// can merge per-chunk results in index order and stay deterministic.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace e2g {

/// Worker count: E2G_JOBS if set, else hardware concurrency (at least 1).
inline unsigned default_jobs() {
  if (const char* env = std::getenv("E2G_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(chunk, begin, end) for `chunks` contiguous ranges of [0, n).
template <class Fn>
void parallel_chunks(std::size_t n, unsigned jobs, std::size_t chunks, Fn&& fn) {
  if (n == 0) return;
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  auto range = [&](std::size_t c) {
    return std::pair{n * c / chunks, n * (c + 1) / chunks};
  };
  if (jobs <= 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = range(c);
      fn(c, b, e);
    }
    return;
  }
  std::exception_ptr err;
  std::mutex m;
  std::size_t next = 0;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, chunks); ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t c;
        {
          std::lock_guard lk(m);
          if (next >= chunks || err) return;
          c = next++;
        }
        try {
          auto [b, e] = range(c);
          fn(c, b, e);
        } catch (...) {
          std::lock_guard lk(m);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace e2g
