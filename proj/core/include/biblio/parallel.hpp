#ifndef BIBLIO_PARALLEL_HPP
#define BIBLIO_PARALLEL_HPP

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace biblio {

// Runs fn(lo, hi, chunk_index) over [0, n) split into contiguous chunks,
// one thread per chunk. Callers keep results deterministic by writing into
// pre-sized slots (or by merging chunk results in chunk order afterwards).
// threads == 0 means hardware concurrency. The first exception thrown by a
// worker is rethrown after all workers joined.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (n == 0) return;
  if (threads > n) threads = static_cast<unsigned>(n);
  if (threads <= 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  const std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = static_cast<std::size_t>(t) * chunk;
    if (lo >= n) break;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi, t] {
      try {
        fn(lo, hi, static_cast<std::size_t>(t));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace biblio

#endif  // BIBLIO_PARALLEL_HPP
