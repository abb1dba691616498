#pragma once

#include <cstddef>
#include <functional>

namespace memlab {

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Items are claimed
/// dynamically; callers write results by index so the outcome does not depend
/// on scheduling. The first exception thrown by any item is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace memlab
