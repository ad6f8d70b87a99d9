#pragma once

#include <cstddef>
#include <functional>

namespace rectrep {

// Worker count: hardware concurrency, capped by the SEQPAIR_THREADS
// environment variable when it holds a positive integer.
unsigned worker_count();

// Calls body(i) for every i in [0, count), spreading indices over up to
// `workers` threads. Callers must write results to per-index slots;
// the iteration order across threads is unspecified. The first exception
// thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers = worker_count());

}  // namespace rectrep
