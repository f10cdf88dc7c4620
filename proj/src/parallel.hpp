#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tnes::detail {

// Runs produce(i) for i in [0, count) on up to `threads` workers and hands the
// results to consume() strictly in index order, as soon as each prefix is
// complete. consume() runs under a lock, never concurrently with itself.
template <class T, class Produce, class Consume>
void ordered_parallel(std::size_t count, unsigned threads, Produce&& produce, Consume&& consume) {
  if (count == 0) return;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) consume(produce(i));
    return;
  }
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> abort{false};
  std::size_t next_emit = 0;
  std::mutex mu;
  std::exception_ptr error;

  auto work = [&] {
    for (;;) {
      if (abort.load()) return;
      const std::size_t i = next_task.fetch_add(1);
      if (i >= count) return;
      try {
        T value = produce(i);
        std::lock_guard<std::mutex> lock(mu);
        slots[i].emplace(std::move(value));
        while (next_emit < count && slots[next_emit]) {
          consume(std::move(*slots[next_emit]));
          slots[next_emit].reset();
          ++next_emit;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        abort.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tnes::detail
