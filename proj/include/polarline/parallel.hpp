#pragma once

#include <cstddef>
#include <functional>

namespace polarline {

// Worker count: POLARLINE_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for every i in [0, count) on up to `threads` threads
// (0 = worker_count()). Indices are handed out dynamically; callers write
// into per-index slots so the result does not depend on scheduling. The first
// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace polarline
