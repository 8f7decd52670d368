#pragma once

#include <cstddef>
#include <functional>

namespace simstring {

// Worker count: SIMSTRING_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t defaultThreadCount();

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default). Indices
// are handed out in increasing order; the first exception thrown is rethrown
// after all workers stop.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

}  // namespace simstring
