#pragma once

#include <cstddef>
#include <functional>

namespace tlie {

/// Worker count for tuple-parallel checkers: THREELIE_WORKERS when set,
/// otherwise hardware concurrency clamped to 8.
std::size_t worker_count();

/// Runs fn(0..count-1) on a bounded set of workers. Callers own output
/// determinism: write into per-index slots, compact afterwards in order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace tlie
