// Chunked work dispatch over grid index ranges.
//
// Chunks are contiguous, disjoint index ranges; each worker writes only its
// own output slice, so results are bit-identical for any thread count and
// depend only on the chunk size (which fixes where evaluations re-seed).
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zetalab {

inline constexpr std::int64_t kDefaultChunk = 1 << 18;

// Runs fn(j0, j1) over [0, count) split into chunks of the given size.
inline void for_each_chunk(std::int64_t count, std::int64_t chunk, int threads,
                           const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (chunk < 1) throw std::invalid_argument("for_each_chunk: chunk must be >= 1");
    if (threads < 1) throw std::invalid_argument("for_each_chunk: threads must be >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (std::int64_t j0 = 0; j0 < count; j0 += chunk)
        ranges.emplace_back(j0, std::min(j0 + chunk, count));
    if (threads == 1 || ranges.size() == 1) {
        for (const auto& [a, b] : ranges) fn(a, b);
        return;
    }
    std::size_t next = 0;
    for (; next < ranges.size();) {
        std::size_t batch = std::min<std::size_t>(threads, ranges.size() - next);
        std::vector<std::thread> pool;
        pool.reserve(batch);
        for (std::size_t i = 0; i < batch; ++i) {
            auto [a, b] = ranges[next + i];
            pool.emplace_back([&fn, a, b] { fn(a, b); });
        }
        for (auto& th : pool) th.join();
        next += batch;
    }
}

}  // namespace zetalab
