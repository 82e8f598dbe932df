#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fragdiff {

// Effective worker count: 0 means "all logical processors".
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Run fn(i) for i in [0, n) on up to `threads` workers. Work is claimed in
// fixed-size blocks from an atomic cursor; callers that need deterministic
// output must write results into index-addressed slots (scheduling order is
// not deterministic, slot contents are). Exceptions are captured and the
// first one rethrown after the pool joins.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t block = (n / (threads * 8)) + 1;

    auto worker = [&]() {
        for (;;) {
            std::size_t begin = cursor.fetch_add(block);
            if (begin >= n) return;
            std::size_t end = begin + block < n ? begin + block : n;
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    unsigned spawn = threads < n ? threads : static_cast<unsigned>(n);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fragdiff
