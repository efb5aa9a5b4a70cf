#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace cyclotome {

/// Worker count actually used for a sweep: `requested` when positive,
/// otherwise the CYCLOTOME_THREADS environment variable, otherwise the
/// hardware concurrency. Always at least 1.
std::size_t effective_threads(std::size_t requested = 0);

/// Splits [begin, end) into contiguous chunks, one per worker. The body
/// receives (worker_index, lo, hi). Exceptions from workers are rethrown
/// on the calling thread after all workers join.
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace cyclotome
