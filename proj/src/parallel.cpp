#include "weylinc/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace weylinc {

void parallel_blocks(std::size_t count, std::size_t block_size, int threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (count == 0)
        return;
    if (block_size == 0)
        block_size = 1;
    const std::size_t nblocks = block_count(count, block_size);

    if (threads <= 1 || nblocks == 1) {
        for (std::size_t b = 0; b < nblocks; ++b) {
            std::size_t begin = b * block_size;
            std::size_t end = begin + block_size < count ? begin + block_size : count;
            fn(b, begin, end);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= nblocks)
                return;
            std::size_t begin = b * block_size;
            std::size_t end = begin + block_size < count ? begin + block_size : count;
            fn(b, begin, end);
        }
    };

    std::vector<std::thread> pool;
    std::size_t nthreads = static_cast<std::size_t>(threads);
    if (nthreads > nblocks)
        nthreads = nblocks;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
}

}  // namespace weylinc
