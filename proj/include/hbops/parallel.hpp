#pragma once

#include <cstddef>
#include <functional>

namespace hbops {

// Runs body(i) for i in [0, count). With threads > 1 the indices are split
// into blocks; callers gather results by index so the output is identical
// to the sequential run.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

// 0 resolves to the machine's hardware concurrency.
int resolve_threads(int requested);

} // namespace hbops
