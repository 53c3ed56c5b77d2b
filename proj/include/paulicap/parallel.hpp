#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace paulicap {

// Runs fn(i) for every i in [0, count), optionally across threads. Callers
// must write results into per-index slots so the outcome cannot depend on
// scheduling. The first exception thrown by any worker is rethrown here.
inline void parallel_for(std::int64_t count, int n_threads,
                         const std::function<void(std::int64_t)>& fn) {
    if (n_threads <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(std::min<std::int64_t>(n_threads, count));
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::int64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace paulicap
