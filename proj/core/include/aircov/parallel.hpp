#ifndef AIRCOV_PARALLEL_HPP
#define AIRCOV_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace aircov {

// Worker count resolution: explicit request > AIRCOV_THREADS > hardware.
// A request of 0 means "decide for me".
unsigned effective_threads(unsigned requested = 0);

// Runs fn(block_index, begin, end) over [0, n) split into fixed-size blocks.
// Block boundaries depend only on (n, block_size), so per-block results are
// identical for any worker count; callers combine them in block order.
void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     unsigned threads = 0);

// Convenience: parallel loop over n independent items, fn(i).
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

} // namespace aircov

#endif
