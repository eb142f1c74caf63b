#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace selfpow {

inline int effective_threads(int requested)
{
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

// Runs fn(chunk_index, begin, end) over [begin, end) split into fixed,
// scheduling-independent chunks. Chunk boundaries depend only on the range
// and the chunk count, so per-chunk results can be merged deterministically.
inline void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads,
                            const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn)
{
    threads = effective_threads(threads);
    const std::uint64_t n = end > begin ? end - begin : 0;
    if (n == 0)
        return;
    const std::uint64_t nchunks = std::min<std::uint64_t>(n, std::uint64_t(threads));
    if (nchunks <= 1) {
        fn(0, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t lo = begin + n * c / nchunks;
        std::uint64_t hi = begin + n * (c + 1) / nchunks;
        pool.emplace_back([&fn, c, lo, hi] { fn(std::size_t(c), lo, hi); });
    }
    for (auto& t : pool)
        t.join();
}

// Work-steals items 0..count-1 across a pool; results must be written to
// per-item slots so the output order never depends on scheduling.
inline void parallel_items(std::size_t count, int threads,
                           const std::function<void(std::size_t)>& fn)
{
    threads = effective_threads(threads);
    if (count == 0)
        return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, int(count));
    pool.reserve(size_t(n));
    for (int t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
}

}  // namespace selfpow
