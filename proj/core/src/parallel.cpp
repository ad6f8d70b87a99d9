#include "rectrep/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rectrep {

unsigned worker_count() {
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SEQPAIR_THREADS")) {
    try {
      const long value = std::stol(cap);
      if (value > 0) workers = std::min(workers, static_cast<unsigned>(value));
    } catch (const std::exception&) {
      // Ignore unparsable values.
    }
  }
  return workers;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned max_workers) {
  const std::size_t workers = std::min<std::size_t>(max_workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rectrep
