#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace nisg {

// Worker count used by the exhaustive scans.  0 means "use hardware
// concurrency".  Results never depend on this setting.
void set_thread_count(int n);
int thread_count();
int effective_thread_count();

// Scans [0, total) and returns the smallest index where ok(i) is false, or
// nullopt.  Chunks are contiguous, each worker reports the first failure in
// its own chunk, and the minimum over chunks is taken, so the answer is
// independent of the worker count.
template <class F>
std::optional<std::uint64_t> first_violation(std::uint64_t total, F&& ok) {
  const int workers = effective_thread_count();
  if (workers <= 1 || total < 1u << 14) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (!ok(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{UINT64_MAX};
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      const std::uint64_t lo = static_cast<std::uint64_t>(t) * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        // A hit in an earlier chunk beats anything this worker can find.
        if ((i & 1023) == 0 &&
            best.load(std::memory_order_relaxed) < lo) {
          return;
        }
        if (!ok(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  const std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

struct Pair {
  int x, y;
};
struct Triple {
  int x, y, z;
};
struct Quad {
  int x1, x2, y1, y2;
};

template <class F>
std::optional<Pair> first_bad_pair(int n, F&& ok) {
  const auto bad = first_violation(
      static_cast<std::uint64_t>(n) * n, [&](std::uint64_t i) {
        return ok(static_cast<int>(i / n), static_cast<int>(i % n));
      });
  if (!bad) return std::nullopt;
  return Pair{static_cast<int>(*bad / n), static_cast<int>(*bad % n)};
}

template <class F>
std::optional<Triple> first_bad_triple(int n, F&& ok) {
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const auto bad = first_violation(nn * nn * nn, [&](std::uint64_t i) {
    return ok(static_cast<int>(i / (nn * nn)),
              static_cast<int>(i / nn % nn), static_cast<int>(i % nn));
  });
  if (!bad) return std::nullopt;
  return Triple{static_cast<int>(*bad / (nn * nn)),
                static_cast<int>(*bad / nn % nn), static_cast<int>(*bad % nn)};
}

template <class F>
std::optional<Quad> first_bad_quad(int n, F&& ok) {
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const auto bad =
      first_violation(nn * nn * nn * nn, [&](std::uint64_t i) {
        return ok(static_cast<int>(i / (nn * nn * nn)),
                  static_cast<int>(i / (nn * nn) % nn),
                  static_cast<int>(i / nn % nn), static_cast<int>(i % nn));
      });
  if (!bad) return std::nullopt;
  return Quad{static_cast<int>(*bad / (nn * nn * nn)),
              static_cast<int>(*bad / (nn * nn) % nn),
              static_cast<int>(*bad / nn % nn), static_cast<int>(*bad % nn)};
}

}  // namespace nisg
