#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tp/filtration.hpp"
#include "tp/graph.hpp"

namespace tp {

/// Seeded generator with a fully specified bounded draw, so shuffles are
/// reproducible byte-for-byte across platforms and worker counts.
class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform value in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound ? (~std::uint64_t(0) / bound) * bound : 0;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    /// Derives an independent stream for a trial index.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

/// Uniformly random edgewise filtration of K_n.
template <class W = std::uint64_t>
basic_edgewise_filtration<W> random_complete_filtration(int n, std::uint64_t seed) {
    auto edges = complete<W>(n).edges();
    rng r(seed);
    r.shuffle(edges);
    return basic_edgewise_filtration<W>(n, std::move(edges));
}

/// Random filtration of K_n forced through T_{n,2}: the Turan edges are
/// permuted first, then the remaining edges.
template <class W = std::uint64_t>
basic_edgewise_filtration<W> forced_turan_filtration(int n, std::uint64_t seed) {
    rng r(seed);
    auto turan_edges = turan<W>(n, 2).first.edges();
    r.shuffle(turan_edges);
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : complete<W>(n).edges())
        if (u % 2 == v % 2) rest.emplace_back(u, v);
    r.shuffle(rest);
    turan_edges.insert(turan_edges.end(), rest.begin(), rest.end());
    return basic_edgewise_filtration<W>(n, std::move(turan_edges));
}

/// Random ordering of a random edge subset (not necessarily complete).
template <class W = std::uint64_t>
basic_edgewise_filtration<W> random_filtration(int n, std::uint64_t seed) {
    auto edges = complete<W>(n).edges();
    rng r(seed);
    r.shuffle(edges);
    const std::size_t keep = edges.empty() ? 0 : r.below(edges.size() + 1);
    edges.resize(keep);
    return basic_edgewise_filtration<W>(n, std::move(edges));
}

/// Random graph on n vertices with m edges.
template <class W = std::uint64_t>
basic_graph<W> random_graph(int n, std::int64_t m, rng& r) {
    auto slots = complete<W>(n).edges();
    for (std::size_t i = 0; i < static_cast<std::size_t>(m) && i < slots.size(); ++i)
        std::swap(slots[i], slots[i + r.below(slots.size() - i)]);
    basic_graph<W> g(n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(m) && i < slots.size(); ++i)
        g.add_edge(slots[i].first, slots[i].second);
    return g;
}

} // namespace tp
