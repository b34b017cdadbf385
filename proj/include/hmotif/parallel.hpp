#ifndef HMOTIF_PARALLEL_HPP
#define HMOTIF_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hmotif {

inline unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Splits [0, n) into one contiguous block per worker and runs
// fn(worker, begin, end) on each. workers == 1 runs inline, which is the
// sequential reference path. If any worker throws, all workers are joined
// and one of the exceptions is rethrown.
template <typename Fn>
void parallel_blocks(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        fn(0u, std::size_t(0), n);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);

    std::exception_ptr error;
    std::atomic_flag error_claimed = ATOMIC_FLAG_INIT;
    auto guarded = [&](unsigned w, std::size_t begin, std::size_t end) {
        try {
            fn(w, begin, end);
        } catch (...) {
            if (!error_claimed.test_and_set()) error = std::current_exception();
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        std::size_t begin = n * w / workers;
        std::size_t end = n * (w + 1) / workers;
        threads.emplace_back([&guarded, w, begin, end] { guarded(w, begin, end); });
    }
    guarded(0u, std::size_t(0), n / workers);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace hmotif

#endif
