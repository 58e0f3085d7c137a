#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace slspec {

/// Runs body(i) for i in [first, last) on up to `threads` workers (0 means
/// hardware concurrency). The first exception thrown by any call is rethrown
/// after all workers have joined.
template <class Body>
void parallel_for(int first, int last, Body&& body, unsigned threads = 0)
{
    if (last <= first) return;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(last - first));
    if (threads <= 1) {
        for (int i = first; i < last; ++i) body(i);
        return;
    }
    std::atomic<int> next{first};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next++; i < last; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = last;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (error) std::rethrow_exception(error);
}

} // namespace slspec
