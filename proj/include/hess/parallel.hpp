#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hess::parallel {

// jobs == 0 means one thread per hardware core.
inline int normalize_jobs(int jobs) {
  if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  return jobs < 1 ? 1 : jobs;
}

// out[i] = fn(i) for i in [0, count), computed on up to `jobs` threads.
// every index is computed independently and stored by position, so the
// result does not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t count, int jobs, Fn fn) {
  jobs = normalize_jobs(jobs);
  std::vector<T> out(count);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int spawn = jobs < static_cast<int>(count) ? jobs : static_cast<int>(count);
  threads.reserve(spawn);
  for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace hess::parallel
