#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace pircon {

/// Evaluates f(0..count-1) on up to `jobs` threads and returns results in index
/// order, so output never depends on the degree of parallelism. The first
/// exception (by index) is rethrown after all workers finish.
template <typename F>
auto parallel_map(std::size_t count, unsigned jobs, F&& f) {
  using R = decltype(f(std::size_t{0}));
  // vector<bool> packs bits, so concurrent writes to neighbours would race.
  using Slot = std::conditional_t<std::is_same_v<R, bool>, unsigned char, R>;
  std::vector<Slot> slots(count);
  auto finish = [&] {
    if constexpr (std::is_same_v<R, bool>)
      return std::vector<bool>(slots.begin(), slots.end());
    else
      return std::move(slots);
  };
  std::vector<std::exception_ptr> errors(count);
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i] = f(i);
    return finish();
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return finish();
}

}  // namespace pircon
