#pragma once

#include <cstddef>
#include <functional>

namespace rotaperm {

// Worker count from ROTAPERM_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

// Runs body(i) for i in [0, n) over worker_count() threads. Indices are handed
// out dynamically; callers that need deterministic output must write results
// into per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rotaperm
