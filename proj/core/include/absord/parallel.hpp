#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace absord {

inline std::atomic<int>& thread_budget_ref() {
  static std::atomic<int> budget{1};
  return budget;
}

inline void set_thread_budget(int threads) {
  thread_budget_ref().store(threads < 1 ? 1 : threads);
}

inline int thread_budget() { return thread_budget_ref().load(); }

// Runs fn(i) for i in [0, count), splitting the range across the configured
// budget.  The default budget of 1 keeps everything on the caller's thread.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  int workers = std::min(thread_budget(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace absord
