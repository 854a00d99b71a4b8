#ifndef NEARPRIME_PARALLEL_HPP_
#define NEARPRIME_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nearprime {

/// out[i] = f(i) for i < n on up to `jobs` threads. Results keep index
/// order, so output does not depend on scheduling. The first exception
/// (lowest index) is rethrown after all workers join.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, std::size_t jobs, F &&f) {
  std::vector<R> out(n);
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_at) {
          failed_at = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return out;
}

} // namespace nearprime

#endif // NEARPRIME_PARALLEL_HPP_
