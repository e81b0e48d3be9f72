#include "landscape/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace landscape {

void parallel_for_index(std::uint64_t count, unsigned threads,
                        const std::function<void(std::uint64_t)>& fn) {
  if (count == 0) return;
  threads = std::max<unsigned>(
      1u, static_cast<unsigned>(std::min<std::uint64_t>(threads, count)));
  if (threads == 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  // Interleaved assignment keeps per-worker load balanced even when cost
  // grows with the index.
  auto worker = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < count; i += threads) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace landscape
