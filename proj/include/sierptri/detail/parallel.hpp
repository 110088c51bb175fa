#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sierptri::detail {

/// Runs fn(i) for i in [0, count), fanned out over a fixed number of threads.
/// Each index is handled exactly once, so writes to per-index slots are
/// race-free and the result does not depend on the schedule.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    unsigned k = threads > 0 ? static_cast<unsigned>(threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (k <= 1 || count < 2 * k) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(k);
    std::size_t chunk = (count + k - 1) / k;
    for (unsigned t = 0; t < k; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace sierptri::detail
