#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ravenlab {

// Worker cap: RAVENLAB_THREADS when set, hardware concurrency otherwise.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("RAVENLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Index-sharded parallel loop. Results must be written by index so the
// outcome is identical under any schedule; with a budget of one this is a
// plain loop.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_budget();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += workers) fn(i);
        });
    for (auto& th : threads) th.join();
}

}  // namespace ravenlab
