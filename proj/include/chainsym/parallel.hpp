#ifndef CHAINSYM_PARALLEL_HPP
#define CHAINSYM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace chainsym {

/// Worker count from CHAINSYM_JOBS, falling back to 1.
inline int default_jobs()
{
  if (const char *env = std::getenv("CHAINSYM_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j > 0)
        return j;
    } catch (const std::exception &) {
    }
  }
  return 1;
}

/// Apply `fn` to every item on up to `jobs` threads. Results keep input
/// order, so output does not depend on the worker count. The first exception
/// (by item index) is rethrown.
template<typename T, typename Fn>
auto parallel_map(const std::vector<T> &items, Fn fn, int jobs)
  -> std::vector<decltype(fn(items.front()))>
{
  using R = decltype(fn(items.front()));
  std::vector<R> results(items.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      results[i] = fn(items[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::size_t err_index = items.size();
  std::exception_ptr err;
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }
  if (err)
    std::rethrow_exception(err);
  return results;
}

} // namespace chainsym

#endif // CHAINSYM_PARALLEL_HPP
