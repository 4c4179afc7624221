// SPDX-License-Identifier: Apache-2.0
//
// Deterministic work-sharing helpers. Work is cut into fixed-size chunks
// that do not depend on the thread count, each chunk writes only to its own
// output range, and reductions combine per-chunk partials in chunk order.
// Outputs are therefore identical for any number of threads.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wavepacket {

inline int default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(begin, end) over [0, n) in fixed chunks on `threads` threads.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, std::size_t chunk, Fn&& fn) {
    if (n == 0) return;
    if (threads <= 1 || n <= chunk) {
        for (std::size_t b = 0; b < n; b += chunk) fn(b, std::min(n, b + chunk));
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t b = cursor.fetch_add(chunk);
            if (b >= n) return;
            try {
                fn(b, std::min(n, b + chunk));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// Deterministic sum reduction: partials are kept per chunk and added in
// chunk order once all workers finish.
template <typename Fn>
double parallel_sum(std::size_t n, int threads, std::size_t chunk, Fn&& term) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_chunks(n, threads, chunk, [&](std::size_t b, std::size_t e) {
        double acc = 0.0;
        for (std::size_t i = b; i < e; ++i) acc += term(i);
        partial[b / chunk] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace wavepacket
