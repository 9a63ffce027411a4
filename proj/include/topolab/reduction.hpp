#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace topolab {

/// Worker count: TOPOCHARGE_THREADS caps parallelism, 0 or unset means auto.
inline unsigned max_threads() {
  if (const char* env = std::getenv("TOPOCHARGE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Fixed-order pairwise sum. The split points depend only on n, so the
/// result is identical no matter how the inputs were produced.
template <class T>
T pairwise_sum(const T* data, std::size_t n, const T& zero) {
  if (n == 0) return zero;
  if (n <= 16) {
    T acc = data[0];
    for (std::size_t i = 1; i < n; ++i) acc += data[i];
    return acc;
  }
  const std::size_t half = n / 2;
  T left = pairwise_sum(data, half, zero);
  T right = pairwise_sum(data + half, n - half, zero);
  return left + right;
}

template <class T>
T pairwise_sum(const std::vector<T>& v, const T& zero = T{}) {
  return pairwise_sum(v.data(), v.size(), zero);
}

/// Runs fn(i) for i in [0, n). Each index writes only its own outputs, so
/// chunking never changes results. Exceptions are rethrown on the caller.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(max_threads(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Parallel map + deterministic reduce: values are materialized per index,
/// then pairwise-summed in fixed order. Bit-reproducible across thread
/// counts.
template <class T, class F>
T map_sum(std::size_t n, F&& fn, const T& zero = T{}) {
  std::vector<T> values(n, zero);
  parallel_for(n, [&](std::size_t i) { values[i] = fn(i); });
  return pairwise_sum(values, zero);
}

}  // namespace topolab
