#include "hbops/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace hbops {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    threads = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), count);
    if (threads <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::size_t block = (count + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * block;
        const std::size_t hi = std::min(count, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

} // namespace hbops
