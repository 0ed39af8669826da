#include "shifted/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace shifted {

namespace {

unsigned budget_from_env() {
    const char* raw = std::getenv("SHIFTED_BETTI_THREADS");
    if (raw == nullptr || *raw == '\0')
        return 0;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0)
        return 0; // unparsable values fall back to auto
    return static_cast<unsigned>(value);
}

std::atomic<unsigned> g_budget{budget_from_env()};

unsigned effective_threads(std::size_t count) {
    unsigned budget = g_budget.load(std::memory_order_relaxed);
    if (budget == 0) {
        budget = std::thread::hardware_concurrency();
        if (budget == 0)
            budget = 1;
    }
    if (budget > count)
        budget = static_cast<unsigned>(count);
    return budget;
}

} // namespace

unsigned thread_budget() { return effective_threads(~std::size_t{0}); }

void set_thread_budget(unsigned threads) {
    g_budget.store(threads, std::memory_order_relaxed);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    const unsigned workers = effective_threads(count);
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(count, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(body);
    body();
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace shifted
