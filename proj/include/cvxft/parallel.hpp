#ifndef CVXFT_PARALLEL_HPP
#define CVXFT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cvxft {

// Runs fn(i) for i in [0, n). Each index owns its output slot, so results are
// independent of scheduling; the first exception is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace cvxft

#endif
