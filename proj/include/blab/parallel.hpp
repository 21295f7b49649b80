#pragma once

#include <cstddef>
#include <functional>

namespace blab {

/// Worker cap from BLAB_THREADS (0 or unset = hardware concurrency).
std::size_t thread_cap();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on worker
/// threads. Chunks write disjoint output ranges, so results are independent
/// of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace blab
