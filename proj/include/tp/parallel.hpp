#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace tp {

/// Worker count resolution: explicit request, then the TP_MAX_WORKERS
/// environment variable, then hardware parallelism.
inline int resolve_workers(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TP_MAX_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Splits [0, total) into contiguous shards, runs body(shard, begin, end)
/// on each, and merges the per-shard results in shard order. merge must be
/// associative for the outcome to be independent of the worker count.
template <class R, class Body, class Merge>
R parallel_reduce(std::uint64_t total, int workers, R init, Body body, Merge merge) {
    workers = std::max(1, workers);
    const std::uint64_t shards =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total ? total : 1);
    const std::uint64_t chunk = (total + shards - 1) / shards;
    std::vector<R> partial(shards, init);
    std::vector<std::thread> threads;
    threads.reserve(shards);
    for (std::uint64_t s = 0; s < shards; ++s) {
        const std::uint64_t begin = s * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&, s, begin, end]() { partial[s] = body(s, begin, end); });
    }
    for (auto& t : threads) t.join();
    R result = init;
    for (const R& p : partial) result = merge(result, p);
    return result;
}

} // namespace tp
