#pragma once

#include <cstddef>
#include <functional>

namespace lpheat {

/// Worker count: LP_HEAT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads with a
/// static partition.  Results must go to per-index slots, which keeps the
/// output independent of scheduling.  The exception of the lowest failing
/// index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lpheat
