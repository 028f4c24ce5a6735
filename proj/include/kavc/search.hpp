// First-hit search over a dense range of candidate indices. The parallel
// version returns exactly what the serial one does: the smallest accepted
// index, independent of scheduling.

#ifndef KAVC_SEARCH_HPP
#define KAVC_SEARCH_HPP

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>

namespace kavc {

enum class Execution : std::uint8_t { serial, parallel };

// make_checker() is called once per worker and must return a callable
// bool(std::uint64_t) with its own scratch state.
template <class MakeChecker>
std::optional<std::uint64_t> find_first_serial(std::uint64_t count, MakeChecker&& make_checker) {
  auto check = make_checker();
  for (std::uint64_t i = 0; i < count; ++i) {
    if (check(i)) return i;
  }
  return std::nullopt;
}

template <class MakeChecker>
std::optional<std::uint64_t> find_first_parallel(std::uint64_t count, MakeChecker&& make_checker,
                                                 std::uint64_t block = 256) {
  const std::uint64_t blocks = (count + block - 1) / block;
  std::atomic<std::uint64_t> best{count};
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::optional<decltype(make_checker())> check;
    try {
      check.emplace(make_checker());
    } catch (...) {
#pragma omp critical(kavc_search_failure)
      if (!failure) failure = std::current_exception();
    }
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * block;
      if (!check || begin >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(count, begin + block);
      try {
        for (std::uint64_t i = begin; i < end && i < best.load(std::memory_order_relaxed); ++i) {
          if (!(*check)(i)) continue;
          std::uint64_t seen = best.load(std::memory_order_relaxed);
          while (i < seen && !best.compare_exchange_weak(seen, i, std::memory_order_relaxed)) {
          }
          break;
        }
      } catch (...) {
#pragma omp critical(kavc_search_failure)
        if (!failure) failure = std::current_exception();
        best.store(0, std::memory_order_relaxed);
      }
    }
  }

  if (failure) std::rethrow_exception(failure);
  const std::uint64_t hit = best.load();
  if (hit >= count) return std::nullopt;
  return hit;
}

// Serial below `parallel_threshold` candidates, where thread start-up costs
// more than the search.
template <class MakeChecker>
std::optional<std::uint64_t> find_first(std::uint64_t count, MakeChecker&& make_checker,
                                        Execution execution, std::uint64_t parallel_threshold) {
  if (execution == Execution::serial || count < parallel_threshold) {
    return find_first_serial(count, make_checker);
  }
  return find_first_parallel(count, make_checker);
}

}  // namespace kavc

#endif  // KAVC_SEARCH_HPP
