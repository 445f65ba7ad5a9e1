#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace kspec {

/// Execution policy for the data-parallel maps. `serial` is the reference path;
/// both policies produce bitwise-identical results because every reduction is
/// done afterwards in index order.
enum class Exec { serial, parallel };

/// Run body(i) for i in [0, count). Exceptions thrown by any iteration are
/// captured and the first one (in completion order) is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Number of worker threads the parallel policy will use.
int max_threads();

}  // namespace kspec
