// Tiny static-partition worker pool.  The worker count comes from the
// STRATWAVE_WORKERS environment variable (hardware concurrency when unset).
// Work items are indexed, each index is computed exactly once, and callers
// assemble results by index, so output never depends on the worker count.

#pragma once

#include <cstddef>
#include <functional>

namespace stratwave {

int worker_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace stratwave
