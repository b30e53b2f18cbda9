#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace plateau {

// Process-wide worker count; 0 means hardware concurrency.
int default_jobs();
void set_default_jobs(int jobs);
int resolve_jobs(int jobs);

// Splits [0,total) into a fixed number of chunks independent of the worker count,
// so reductions merged by chunk index are deterministic. fn(chunk, begin, end).
template <class Fn>
void parallel_chunks(std::uint64_t total, std::size_t nchunks, int jobs, Fn&& fn) {
    if (total == 0) return;
    nchunks = std::max<std::size_t>(1, std::min<std::uint64_t>(nchunks, total));
    const std::uint64_t step = (total + nchunks - 1) / nchunks;
    nchunks = static_cast<std::size_t>((total + step - 1) / step);
    int workers = std::min<int>(resolve_jobs(jobs), static_cast<int>(nchunks));
    auto run = [&](std::size_t c) {
        std::uint64_t b = c * step, e = std::min(total, b + step);
        fn(c, b, e);
    };
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) run(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                try {
                    run(c);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace plateau
