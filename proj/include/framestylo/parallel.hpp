#pragma once

#include <cstddef>
#include <functional>

namespace framestylo {

// Worker thread budget: FRAMESTYLO_THREADS if set to a positive integer,
// otherwise the hardware concurrency.
std::size_t thread_cap();

// Runs body(worker, begin, end) over a partition of [0, n) into contiguous
// blocks, one block per worker. Nested calls run on the calling thread.
void parallel_blocks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

// Runs body(i) for every i in [0, n). Each index is processed exactly once,
// so results written to per-index slots do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace framestylo
