#pragma once

#include <cstddef>
#include <functional>

namespace eoplab {

/// Worker count taken from EOP_LAB_THREADS; unset, empty, or 0 means "use
/// std::thread::hardware_concurrency()".  Malformed values raise.
int thread_budget();

/// Runs fn(0..n-1) across the thread budget.  Iterations are claimed through
/// an atomic counter; the first exception thrown by any worker is rethrown on
/// the calling thread after all workers have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace eoplab
