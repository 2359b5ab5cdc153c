#pragma once
// Deterministic work splitting: a range [0,total) is cut into one contiguous
// chunk per worker; callers merge per-worker results order-independently, so
// the outcome never depends on the worker count.

#include <cstdint>
#include <thread>
#include <vector>

namespace caring {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

template <class Fn>
void run_chunked(std::uint64_t total, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (total == 0) return;
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
  if (workers == 1) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  std::uint64_t chunk = total / workers, extra = total % workers;
  std::vector<std::thread> pool;
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    if (w + 1 == workers) {
      fn(w, begin, end);
    } else {
      pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace caring
