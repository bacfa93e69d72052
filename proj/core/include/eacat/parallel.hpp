#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace eacat {

struct VerifyOptions {
  unsigned jobs = 1;   // upper bound on worker threads
  bool force = false;  // bypass feasibility guards
};

inline unsigned default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Searches `body(0) .. body(count-1)` for a counterexample and returns the one
/// with the smallest index. `body(i)` must be pure and must itself return its
/// lexicographically first witness, so the result is independent of `jobs`.
template <class Result, class Body>
std::optional<Result> find_first(std::size_t count, unsigned jobs, Body&& body) {
  if (count == 0)
    return std::nullopt;
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto r = body(i))
        return r;
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::vector<std::optional<Result>> found(count);
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load())
          return;
        if (auto r = body(i)) {
          found[i] = std::move(r);
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error)
        error = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
  pool.clear();

  if (error)
    std::rethrow_exception(error);
  std::size_t b = best.load();
  if (b < count)
    return std::move(found[b]);
  return std::nullopt;
}

} // namespace eacat
