#pragma once

// Index-parallel loop for sweeps. Each index writes only its own slot, so results
// do not depend on the thread count or scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hermspace/errors.hpp"

namespace hermspace {

/// Worker count: HERMSPACE_THREADS if set (positive integer), else hardware concurrency.
inline std::size_t thread_count() {
    if (const char* env = std::getenv("HERMSPACE_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1) {
            throw DomainError("HERMSPACE_THREADS must be a positive integer, got '" +
                              std::string(env) + "'");
        }
        return static_cast<std::size_t>(value);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, count). The first exception (lowest index) is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t threads = thread_count()) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex guard;
    std::size_t failed_at = count;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(guard);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace hermspace
