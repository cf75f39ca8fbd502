// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace podsum {

inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs f(i) for i in [0, n). Writes must go to index-addressed slots so the
// result is identical for any worker count. Exceptions from workers are
// rethrown on the calling thread (first one wins).
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    constexpr std::size_t kChunk = 16;

    auto worker = [&] {
        for (;;) {
            std::size_t begin = next.fetch_add(kChunk);
            if (begin >= n) return;
            std::size_t end = std::min(begin + kChunk, n);
            try {
                for (std::size_t i = begin; i < end; ++i) f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace podsum
