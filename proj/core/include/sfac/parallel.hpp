#pragma once

#include <cstddef>
#include <functional>

namespace sfac {

/// Process-wide cap on worker threads used by line-parallel loops.
/// 0 or 1 means serial.  Results never depend on this value: work items
/// write disjoint output and there are no cross-item reductions.
void set_worker_count(std::size_t workers);
std::size_t worker_count();

/// Runs fn(item, worker_id) for item in [0, count).  Items are dealt out
/// in fixed contiguous blocks per worker, so the assignment (and any
/// per-worker scratch reuse) is deterministic.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t item, std::size_t worker)>& fn);

}  // namespace sfac
