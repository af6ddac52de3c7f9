#ifndef FMZV_PARALLEL_HPP
#define FMZV_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fmzv {

// Runs fn(0..n-1) on up to `threads` workers.  Callers index into
// preallocated result slots, so output is schedule-independent.  The
// first exception wins and is rethrown after all workers join.
inline void parallel_for(size_t n, unsigned threads,
                         const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    unsigned k = threads == 0 ? 1 : threads;
    if (k > n) k = static_cast<unsigned>(n);
    if (k == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> workers;
    workers.reserve(k);
    for (unsigned t = 0; t < k; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace fmzv

#endif
