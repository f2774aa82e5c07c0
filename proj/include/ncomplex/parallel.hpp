#pragma once
/* Bounded work-stealing loop. NCOMPLEX_THREADS caps the worker count
   (default: hardware concurrency); results must be written to disjoint
   locations by the callers, which keeps every scan deterministic. */

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ncx {

inline int thread_budget() {
    if (const char* s = std::getenv("NCOMPLEX_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// runs fn(i) for i in [0, n); rethrows the first exception after joining
template <class Fn>
void parallel_for(long long n, Fn fn) {
    if (n <= 0) return;
    const int workers = static_cast<int>(std::min<long long>(thread_budget(), n));
    if (workers <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr err;
    std::mutex err_mtx;
    auto body = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            const long long i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lk(err_mtx);
                    if (!err) err = std::current_exception();
                }
                stop.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace ncx
