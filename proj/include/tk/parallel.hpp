// parallel.hpp -- deterministic chunked work distribution

#pragma once

#include <cstddef>
#include <functional>

namespace tk {

/// Worker count: the TK_JOBS environment variable when set (clamped to
/// >= 1), otherwise the hardware concurrency.
int worker_count();

/// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, count).
/// Chunk boundaries do not depend on the worker count, so per-chunk results
/// indexed by chunk_index merge into an order that is reproducible under
/// any TK_JOBS setting.  Returns the number of chunks.
std::size_t parallel_chunks(std::size_t count, std::size_t chunk_size,
                            const std::function<void(std::size_t, std::size_t,
                                                     std::size_t)>& fn);

}  // namespace tk
