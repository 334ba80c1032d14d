#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hypercube {

inline int default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

// Splits [0, n) into `jobs` contiguous blocks and runs f(block, begin, end) for
// each, one thread per block. Block boundaries depend only on n and jobs.
template <class F>
void parallel_blocks(std::size_t n, int jobs, F&& f) {
    std::size_t k = static_cast<std::size_t>(std::max(1, jobs));
    k = std::min(k, std::max<std::size_t>(n, 1));
    if (k == 1) {
        f(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(k);
    for (std::size_t b = 0; b < k; ++b) {
        std::size_t lo = n * b / k, hi = n * (b + 1) / k;
        threads.emplace_back([&, b, lo, hi] {
            try {
                f(b, lo, hi);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Runs f(i) for every i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
    parallel_blocks(n, jobs, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) f(i);
    });
}

}  // namespace hypercube
