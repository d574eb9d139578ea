#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cmsing {

// Applies fn to every item on up to `threads` workers. Results come back in
// input order whatever the scheduling; the first exception is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, int threads = 1) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  if (threads <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min<std::size_t>(threads, items.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace cmsing
