#pragma once

#include <cstddef>
#include <functional>

namespace projcong {

/// Runs fn(i) for i in [0, count) on up to `threads` worker threads.
/// Workers own disjoint contiguous index ranges, so results written by index
/// are deterministic regardless of the thread count. threads <= 1 runs inline.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace projcong
