#pragma once

#include <cstddef>
#include <functional>

namespace ipdclust {

// Worker count used by parallel_for. 0 restores the hardware default
// (capped at 8). Thread-safe.
void set_thread_count(unsigned count);
unsigned thread_count();

// Runs fn(begin, end) over a static contiguous partition of [0, n) into at
// most thread_count() chunks. The partition depends only on n and the
// configured count; callers must write to disjoint indices. Results that are
// assembled element-wise and reduced sequentially afterwards are therefore
// identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace ipdclust
