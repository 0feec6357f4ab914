#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace polariton {

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads and returns the
/// results in index order. If any call throws, the exception of the lowest
/// failing index is rethrown, so failures do not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    std::vector<std::exception_ptr> errors(count);
    const unsigned workers =
        static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, count)));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

inline unsigned default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

}  // namespace polariton
