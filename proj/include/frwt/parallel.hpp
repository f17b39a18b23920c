#pragma once

#include <cstddef>
#include <functional>

namespace frwt {

/// Worker count: FRWT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t thread_budget();

/// Runs body(i) for i in [0, n). Indices are split into fixed contiguous
/// blocks; each index is handled by exactly one worker, so any body that
/// writes only to slot i gives results independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace frwt
