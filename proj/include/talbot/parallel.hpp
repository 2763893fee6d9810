// parallel.hpp - tiny work-sharing helper for verification sweeps.
//
// Work items must be independent; callers pre-allocate one result slot
// per item so aggregation stays deterministic. TALBOT_GAUSS_THREADS caps
// the worker count (0 or unset = hardware concurrency).

#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace talbot::detail {

inline std::size_t thread_budget() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("TALBOT_GAUSS_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) n = static_cast<std::size_t>(v);
    }
    return n;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace talbot::detail
