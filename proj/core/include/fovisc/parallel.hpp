#pragma once

#include <cstddef>
#include <functional>

namespace fovisc {

/// Worker count: hardware concurrency, capped by FOVISC_THREADS when set.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads.
/// Exceptions from any task are rethrown (the first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fovisc
