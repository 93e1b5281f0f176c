#pragma once

#include <cstddef>
#include <functional>

namespace seplab {

// Worker count: SEPLAB_THREADS when set to a positive integer, otherwise the
// hardware concurrency (SEPLAB_THREADS=0 also means auto).
unsigned thread_count();

// Calls body(i) for every i in [0, count) on up to thread_count() threads.
// Each index runs exactly once; callers write results into per-index slots and
// reduce afterwards so output does not depend on scheduling. The first
// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace seplab
