#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace symspace::detail {

// Worker count from SYMSPACE_THREADS (or TOOL_THREADS), else the hardware.
inline int worker_count() {
  for (const char* name : {"SYMSPACE_THREADS", "TOOL_THREADS"}) {
    if (const char* v = std::getenv(name)) {
      try {
        const int n = std::stoi(v);
        if (n >= 1) return n;
      } catch (const std::exception&) {
      }
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// results[i] = fn(i) for i < n, computed on worker threads; the output order is
// independent of scheduling.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t n, Fn fn) {
  std::vector<Result> results(n);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += workers) results[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace symspace::detail
