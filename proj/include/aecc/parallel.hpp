#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace aecc {

// Worker cap: ANALOG_ECC_THREADS when set, hardware concurrency otherwise.
std::size_t worker_count();

// Splits [0, total) into fixed chunks and runs fn(chunk_index, begin, end) on
// a transient thread pool. Per-chunk results come back indexed by chunk, so
// callers can merge in a canonical order regardless of scheduling. The first
// exception thrown by a worker is rethrown after all threads join.
template <typename Partial, typename ChunkFn>
std::vector<Partial> run_chunked(std::size_t total, std::size_t chunk_size, std::size_t workers,
                                 ChunkFn fn) {
    if (chunk_size == 0) chunk_size = 1;
    const std::size_t chunks = total == 0 ? 0 : (total + chunk_size - 1) / chunk_size;
    std::vector<Partial> out(chunks);
    if (chunks == 0) return out;

    workers = std::min(workers ? workers : 1, chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            out[c] = fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
                if (c >= chunks || failed.load(std::memory_order_relaxed)) return;
                try {
                    out[c] = fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace aecc
