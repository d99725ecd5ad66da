#ifndef MOTIFCLUST_PARALLEL_HPP
#define MOTIFCLUST_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace motifclust {

// Resolves a thread-count request: n > 0 is taken verbatim, 0 falls back to
// MOTIFCLUST_THREADS, then to hardware_concurrency.
int resolve_threads(int requested);

// Static block partition of [0, count) across threads; f(begin, end) runs on
// each block. Serial when threads <= 1.
void parallel_blocks(std::int64_t count, int threads,
                     const std::function<void(std::int64_t, std::int64_t)>& f);

}  // namespace motifclust

#endif
