#ifndef RAMSEY_PARALLEL_HPP
#define RAMSEY_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ramsey {

// Worker count: RAMSEY_THREADS caps it, default = hardware concurrency.
inline int thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("RAMSEY_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < static_cast<long>(hw)) return static_cast<int>(v);
    if (v >= static_cast<long>(hw)) return static_cast<int>(v);
  }
  return static_cast<int>(hw);
}

// Runs fn(i) for i in [0, total); work items must write only their own
// slots. Deterministic results regardless of the thread count.
template <typename Fn>
void parallel_for(size_t total, Fn&& fn) {
  int workers = thread_count();
  if (workers <= 1 || total <= 1) {
    for (size_t i = 0; i < total; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= total || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace ramsey

#endif  // RAMSEY_PARALLEL_HPP
