// parallel.hpp — Tiny worker-pool map for embarrassingly parallel sweeps

#pragma once

#include <cstddef>
#include <functional>

namespace qcr::parallel {

// Worker count: QCR_THREADS when set (clamped to >= 1), else the hardware
// concurrency.
int worker_count();

// Runs fn(0) .. fn(count-1), distributing indices over workers. Results must
// be written to per-index slots; the call returns after every index ran.
// Exceptions thrown by fn are captured and rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace qcr::parallel
