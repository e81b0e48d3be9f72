#pragma once

#include <cstdint>
#include <functional>

namespace landscape {

// Runs fn(i) for i in [0, count) on up to `threads` workers.  Work is
// partitioned statically, so as long as fn(i) depends only on i the results
// are identical for every thread count.  The first exception thrown by any
// worker is rethrown on the calling thread.
void parallel_for_index(std::uint64_t count, unsigned threads,
                        const std::function<void(std::uint64_t)>& fn);

unsigned default_thread_count();

}  // namespace landscape
