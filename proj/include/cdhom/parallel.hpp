#pragma once

#include <cstddef>
#include <functional>

namespace cdhom {

/// Worker cap: CDHOM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_cap();

/// Calls body(i) for i in [0, count), split into contiguous chunks over at
/// most thread_cap() threads. body must only write state owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

} // namespace cdhom
