#pragma once

#include <cstddef>
#include <functional>

namespace koszul {

/// Worker count for per-degree parallel loops. Defaults to KOSZUL_THREADS, else 1.
std::size_t thread_count();
void set_thread_count(std::size_t threads);

/// Runs fn(0), ..., fn(n - 1), possibly concurrently. The first exception thrown by any
/// index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace koszul
