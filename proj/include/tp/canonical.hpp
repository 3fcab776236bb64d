#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tp/errors.hpp"
#include "tp/graph.hpp"

namespace tp {

/// Permutation-minimal adjacency bit string (colex pair order, MSB-first),
/// so isomorphic graphs yield identical forms. Found by branch-and-bound
/// over vertex placements with prefix pruning; intended for n <= 10.
struct canonical_form_t {
    int n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const canonical_form_t& a, const canonical_form_t& b) {
        return a.n == b.n && a.bits == b.bits;
    }
    friend bool operator<(const canonical_form_t& a, const canonical_form_t& b) {
        return a.n != b.n ? a.n < b.n : a.bits < b.bits;
    }

    std::string str() const {
        std::string s;
        const int pairs = static_cast<int>(choose2(n));
        for (int i = 0; i < pairs; ++i) s += (bits >> (63 - i)) & 1 ? '1' : '0';
        return s;
    }
};

namespace detail {

template <class W>
struct canon_search {
    const basic_graph<W>& g;
    int n;
    int total_pairs;
    std::vector<int> placed;   // new label -> original vertex
    std::vector<bool> used;
    std::uint64_t best = ~0ull;
    bool have_best = false;

    explicit canon_search(const basic_graph<W>& graph)
        : g(graph), n(graph.vertex_count()), total_pairs(static_cast<int>(choose2(n))),
          used(static_cast<std::size_t>(n), false) {}

    // bits holds the first C(q,2) pair bits (colex order, MSB-first) once q
    // vertices are placed.
    void dfs(int q, std::uint64_t bits, int bit_count) {
        if (have_best) {
            const std::uint64_t mask = bit_count ? ~0ull << (64 - bit_count) : 0;
            if ((bits & mask) > (best & mask)) return;
        }
        if (q == n) {
            if (!have_best || bits < best) { best = bits; have_best = true; }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t next = bits;
            int count = bit_count;
            for (int i = 0; i < q; ++i, ++count)
                if (g.has_edge(placed[i], v)) next |= 1ull << (63 - count);
            used[v] = true;
            placed.push_back(v);
            dfs(q + 1, next, count);
            placed.pop_back();
            used[v] = false;
        }
    }
};

} // namespace detail

template <class W>
canonical_form_t canonical_form(const basic_graph<W>& g) {
    if (g.vertex_count() > 10)
        throw precondition_error("canonical_form supports n <= 10");
    detail::canon_search<W> search(g);
    search.dfs(0, 0, 0);
    return {g.vertex_count(), search.have_best ? search.best : 0};
}

} // namespace tp
