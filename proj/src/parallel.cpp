#include "knotdist/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace knotdist {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = all cores

int effective_threads() {
  const int cap = g_max_threads.load(std::memory_order_relaxed);
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int base = hw > 0 ? hw : 1;
  return cap > 0 ? std::min(cap, base) : base;
}
}  // namespace

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

int max_threads() { return effective_threads(); }

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(effective_threads(), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace knotdist
