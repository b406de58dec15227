#ifndef QBIF_DETAIL_PARALLEL_HPP
#define QBIF_DETAIL_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace qbif::detail {

/// Run fn(begin, end) over disjoint chunks of [0, n). Work is keyed by index,
/// so results must be written to per-index slots; the split itself never
/// affects outputs.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  if (n == 0) return;
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > n) workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qbif::detail

#endif  // QBIF_DETAIL_PARALLEL_HPP
