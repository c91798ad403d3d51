#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ridgerate {

// Thread cap: hardware concurrency, optionally limited by RIDGERATE_THREADS.
inline int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("RIDGERATE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

// Static-partition parallel loop over [0, count). Results must be written to
// disjoint slots by index; chunking is fixed by `count` alone, so outputs do
// not depend on how many threads actually run.
inline void parallel_for(long count, const std::function<void(long)>& body) {
  if (count <= 0) return;
  int nt = std::min<long>(thread_cap(), count);
  if (nt <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      for (long i = t; i < count; i += nt) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ridgerate
