#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <type_traits>
#include <vector>

namespace fatflats {

/// Worker count for library sweeps. Defaults to FATFLATS_THREADS, else the
/// hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);  // 0 restores the default

/// out[i] = f(i) for i < count, computed on up to thread_count() threads.
/// Results land in index order, so output never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& f);

namespace detail {
void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);
}

template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& f) {
  static_assert(!std::is_same_v<T, bool>, "vector<bool> elements cannot be written concurrently");
  std::vector<T> out(count);
  detail::run_indexed(count, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace fatflats
