#pragma once

#include <cstddef>
#include <functional>

namespace knotdist {

// Worker-thread cap shared by all parallel loops. 0 means "all cores".
// Results never depend on the setting: every parallel site either fills
// independent slots of a preallocated buffer or reduces with an
// order-normalized rule (value first, lexicographic tie-break).
void set_max_threads(int n);
int max_threads();

// Runs fn(begin, end) over a partition of [0, n) into contiguous chunks,
// possibly on worker threads. fn must only write to locations owned by its
// own index range.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace knotdist
