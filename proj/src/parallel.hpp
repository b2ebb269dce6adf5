#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace gcq::detail {

/// Worker budget: GCQ_THREADS caps it when set, otherwise hardware
/// concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("GCQ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc != 0 ? hc : 1;
}

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order, regardless of how work is scheduled.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, Fn fn) {
    std::vector<std::optional<R>> slots(count);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_budget(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count;
                     i = next.fetch_add(1))
                    slots[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count); // stop handing out work
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

} // namespace gcq::detail
