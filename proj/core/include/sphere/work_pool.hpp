#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sphere {

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
///
/// Indices are handed out through an atomic counter, so results written by
/// index are independent of completion order. If any call throws, the
/// exception from the lowest failing index is rethrown after all threads join.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned workers, Fn&& fn) {
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = count;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(threads - 1);
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace sphere
