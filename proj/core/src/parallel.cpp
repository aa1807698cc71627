#include "aircov/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace aircov {

unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("AIRCOV_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     unsigned threads) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (n + block_size - 1) / block_size;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(effective_threads(threads), n_blocks));

    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b)
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= n_blocks || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(b, b * block_size, std::min(n, (b + 1) * block_size));
                } catch (...) {
                    if (!failed.exchange(true))
                        first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t)>& fn,
                  unsigned threads) {
    // Chunk the index space so the atomic counter is not hammered per item.
    std::size_t chunk = n / (static_cast<std::size_t>(effective_threads(threads)) * 8);
    if (chunk == 0) chunk = 1;
    parallel_blocks(n, chunk, [&](std::size_t, std::size_t beg, std::size_t end) {
        for (std::size_t i = beg; i < end; ++i) fn(i);
    }, threads);
}

} // namespace aircov
