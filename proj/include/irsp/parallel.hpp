#pragma once

#include <cstddef>
#include <functional>

namespace irsp {

// Worker cap shared by every parallel loop; 0 restores the hardware default.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls body(i) for every i in [0, n). Indices are split into contiguous
// blocks, one per worker, so each output slot written by body(i) has exactly
// one writer. Exceptions thrown by body are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace irsp
