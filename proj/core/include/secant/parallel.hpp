#pragma once

#include <cstddef>
#include <functional>

namespace secant {

/// Worker count used when a caller passes 0: the value set by
/// set_default_threads, else the hardware concurrency (at least 1).
unsigned default_threads();
void set_default_threads(unsigned threads);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work items
/// are claimed in index order; the first exception (lowest index) is rethrown
/// after all workers finish. Results must be written to per-index slots so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace secant
