#pragma once

#include <cstddef>
#include <functional>

namespace adiabatic {

/// Worker count: ADIABATIC_LAB_THREADS when set (>= 1), else hardware concurrency.
int worker_count();

/// Calls body(i) for i in [0, count). Results must be written to per-index
/// slots by the caller so the outcome is independent of scheduling. The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace adiabatic
