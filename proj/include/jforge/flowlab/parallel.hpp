#pragma once

#include <cstddef>
#include <functional>

namespace jforge {

// JFORGE_THREADS if set and positive, else hardware concurrency (at least 1).
int thread_count();

// Runs body(i) for i in [0, n). Each index should write only its own slot.
// If bodies throw, the exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace jforge
