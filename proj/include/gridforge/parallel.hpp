#pragma once

#include <cstddef>
#include <functional>

namespace gridforge {

// Worker count used by internally parallel routines. Reads GRIDFORGE_THREADS
// once; set_thread_count overrides it for the rest of the process.
unsigned thread_count();
void set_thread_count(unsigned n);

// Calls body(i) for i in [0, n), splitting the range into contiguous blocks.
// Results must be written to per-index slots so output order never depends
// on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = thread_count());

}  // namespace gridforge
