#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace linkless {

/// Worker count: LINKLESS_JOBS when set, else `requested`, else hardware
/// concurrency. Always at least 1.
inline int resolve_jobs(int requested = 0) {
    if (const char* env = std::getenv("LINKLESS_JOBS"); env != nullptr && *env != '\0') {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    if (requested >= 1) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) on `jobs` threads. Indices are handed out
/// dynamically; callers write results into slot i so output order never
/// depends on scheduling. The first exception thrown is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace linkless
