#pragma once

#include <cstddef>
#include <functional>

namespace dimlift {

/// Worker count used by the library. Initialised from DIMLIFT_THREADS when set,
/// otherwise from std::thread::hardware_concurrency().
int default_threads();
void set_default_threads(int threads);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Callers that
/// reduce must store per-index partials and combine them in index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  int threads = default_threads());

}  // namespace dimlift
