#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace kneserlab {

/// Static block partition of [0, count) over `threads` workers.  Callers keep
/// determinism by writing to preallocated per-index slots or by merging
/// per-worker partials in worker order.
template <typename Fn>
void parallel_for(std::uint64_t count, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (count + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::uint64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace kneserlab
