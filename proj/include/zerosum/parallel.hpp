#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zerosum {

/// Worker count from ZEROSUM_JOBS, else hardware concurrency, at least 1.
unsigned default_jobs();

/**
 * Run f(task, worker) for every task in [0, tasks) on up to `jobs` threads.
 * Tasks are claimed dynamically; callers write results into per-task slots
 * so that merging in task order is independent of scheduling.
 * The first exception thrown by any task is rethrown after all workers join.
 */
template <class F>
void parallel_for(std::size_t tasks, unsigned jobs, F&& f)
{
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1U), std::max<std::size_t>(tasks, 1)));
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t)
            f(t, 0U);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks)
                    break;
                try {
                    f(t, w);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace zerosum
