#pragma once

#include <cstddef>
#include <functional>

namespace weylinc {

/// Runs fn(block_index, begin, end) over [0,count) split into fixed-size
/// blocks.  Block boundaries depend only on block_size, never on the thread
/// count, so per-block results combined in block order are bit-identical for
/// any number of threads.  fn must write only to its own block's slot.
void parallel_blocks(std::size_t count, std::size_t block_size, int threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Number of blocks parallel_blocks will use.
inline std::size_t block_count(std::size_t count, std::size_t block_size) {
    return count == 0 ? 0 : (count + block_size - 1) / block_size;
}

}  // namespace weylinc
