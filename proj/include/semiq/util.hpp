#ifndef SEMIQ_UTIL_HPP
#define SEMIQ_UTIL_HPP

#include <cstddef>
#include <functional>

namespace semiq {

// Thread budget for embarrassingly parallel loops; capped by the
// SEMIQ_MAX_THREADS environment variable when set.
std::size_t max_threads();

// Runs fn(index) for index in [0, count). Chunks across threads when the work
// is large enough; results must go to preallocated, disjoint slots so the
// outcome is identical to the serial order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace semiq

#endif  // SEMIQ_UTIL_HPP
