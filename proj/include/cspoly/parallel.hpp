#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cspoly {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// claimed dynamically; the first exception thrown by any task is rethrown
/// after all threads join.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace cspoly
