#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tp/binomial.hpp"
#include "tp/bits.hpp"
#include "tp/errors.hpp"

namespace tp {

/// Undirected simple graph on labels 0..n-1 with one bit row per vertex.
/// The row type W bounds the vertex capacity (64 by default, 128 via
/// basic_graph<unsigned __int128> for wide sweeps). Values are immutable
/// in spirit: all operations return fresh graphs.
template <class W>
class basic_graph {
public:
    static constexpr int max_vertices = word_bits<W>;

    basic_graph() = default;

    explicit basic_graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), W(0)) {
        if (n < 0 || n > max_vertices)
            throw capacity_error("graph on " + std::to_string(n) + " vertices exceeds capacity " +
                                 std::to_string(max_vertices));
    }

    static basic_graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        basic_graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= bit<W>(v);
        adj_[v] |= bit<W>(u);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] &= ~bit<W>(v);
        adj_[v] &= ~bit<W>(u);
    }

    bool has_edge(int u, int v) const {
        return u != v && u >= 0 && u < n_ && v >= 0 && v < n_ && (adj_[u] & bit<W>(v)) != W(0);
    }

    W neighbors(int v) const { return adj_[v]; }
    W closed_neighborhood(int v) const { return adj_[v] | bit<W>(v); }
    int degree(int v) const { return popcount(adj_[v]); }

    W all_vertices() const { return low_mask<W>(n_); }

    std::int64_t edge_count() const {
        std::int64_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[u] & above_mask<W>(u), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    friend bool operator==(const basic_graph& a, const basic_graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const basic_graph& a, const basic_graph& b) { return !(a == b); }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw precondition_error("vertex out of range");
        if (u == v) throw precondition_error("self-loops are not allowed");
    }

    int n_ = 0;
    std::vector<W> adj_;
};

using graph = basic_graph<std::uint64_t>;
using graph128 = basic_graph<unsigned __int128>;

/// Disjoint vertex classes covering 0..n-1; no class is empty.
template <class W>
struct basic_vertex_partition {
    int n = 0;
    std::vector<W> classes;

    bool valid() const {
        W seen = 0;
        for (W c : classes) {
            if (c == W(0) || (seen & c) != W(0)) return false;
            seen |= c;
        }
        return seen == low_mask<W>(n);
    }
};

using vertex_partition = basic_vertex_partition<std::uint64_t>;

template <class W>
basic_graph<W> complement(const basic_graph<W>& g) {
    const int n = g.vertex_count();
    basic_graph<W> out(n);
    for (int u = 0; u < n; ++u)
        for_each_bit(~g.neighbors(u) & g.all_vertices() & above_mask<W>(u),
                     [&](int v) { out.add_edge(u, v); });
    return out;
}

/// g2's vertices are relabeled with offset g1.n; all cross edges added.
template <class W>
basic_graph<W> join(const basic_graph<W>& g1, const basic_graph<W>& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 + n2 > basic_graph<W>::max_vertices)
        throw capacity_error("join exceeds vertex capacity");
    basic_graph<W> out(n1 + n2);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
    return out;
}

template <class W>
basic_graph<W> disjoint_union(const basic_graph<W>& g1, const basic_graph<W>& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 + n2 > basic_graph<W>::max_vertices)
        throw capacity_error("disjoint union exceeds vertex capacity");
    basic_graph<W> out(n1 + n2);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(u + n1, v + n1);
    return out;
}

template <class W = std::uint64_t>
basic_graph<W> complete(int n) {
    basic_graph<W> g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Star K_{1,p-1} on p vertices, center 0.
template <class W = std::uint64_t>
basic_graph<W> star(int p) {
    if (p < 1) throw precondition_error("star requires p >= 1");
    basic_graph<W> g(p);
    for (int v = 1; v < p; ++v) g.add_edge(0, v);
    return g;
}

template <class W = std::uint64_t>
basic_graph<W> complete_bipartite(int a, int b) {
    return join(basic_graph<W>(a), basic_graph<W>(b));
}

/// Balanced complete multipartite graph; vertex i sits in class i mod k,
/// so every label prefix induces the same construction on fewer vertices.
/// Classes of size 0 (n < k) are left out of the partition.
template <class W = std::uint64_t>
std::pair<basic_graph<W>, basic_vertex_partition<W>> turan(int n, int k) {
    if (n < 0 || k < 1) throw precondition_error("turan requires n >= 0, k >= 1");
    basic_graph<W> g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % k != v % k) g.add_edge(u, v);
    basic_vertex_partition<W> part;
    part.n = n;
    for (int c = 0; c < std::min(k, n); ++c) {
        W mask = 0;
        for (int v = c; v < n; v += k) mask |= bit<W>(v);
        part.classes.push_back(mask);
    }
    return {std::move(g), std::move(part)};
}

/// |E(T_{n,k})| in closed form; agrees with direct counting.
inline std::int64_t turan_edge_count(int n, int k) {
    if (n < 0 || k < 1) throw precondition_error("turan_edge_count requires n >= 0, k >= 1");
    if (n == 0) return 0;
    const std::int64_t a = (n + k - 1) / k;  // ceil
    const std::int64_t b = n / k;            // floor
    const std::int64_t np = (n % k == 0) ? k : n % k;
    return choose2(n) - np * choose2(a) - (k - np) * choose2(b);
}

/// Number of connected components of the subgraph induced on `restrict`.
template <class W>
int connected_component_count(const basic_graph<W>& g, W restrict_mask) {
    restrict_mask &= g.all_vertices();
    int components = 0;
    W remaining = restrict_mask;
    while (remaining) {
        ++components;
        W comp = bit<W>(countr_zero(remaining));
        for (;;) {
            W grown = comp;
            for_each_bit(comp, [&](int v) { grown |= g.neighbors(v) & restrict_mask; });
            if (grown == comp) break;
            comp = grown;
        }
        remaining &= ~comp;
    }
    return components;
}

template <class W>
int connected_component_count(const basic_graph<W>& g) {
    return connected_component_count(g, g.all_vertices());
}

/// Subgraph induced on the vertices of `mask`, relabeled to 0..|mask|-1
/// preserving label order.
template <class W>
basic_graph<W> induced(const basic_graph<W>& g, W mask) {
    mask &= g.all_vertices();
    std::vector<int> verts;
    for_each_bit(mask, [&](int v) { verts.push_back(v); });
    basic_graph<W> out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

template <class W>
basic_graph<W> delete_vertex(const basic_graph<W>& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw precondition_error("vertex out of range");
    return induced(g, g.all_vertices() & ~bit<W>(v));
}

/// Induced subgraph on V minus the closed neighborhood of v.
template <class W>
basic_graph<W> remove_closed_neighborhood(const basic_graph<W>& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw precondition_error("vertex out of range");
    return induced(g, g.all_vertices() & ~g.closed_neighborhood(v));
}

/// Minimum-degree vertex; ties broken by smallest label.
template <class W>
std::pair<int, int> min_degree_vertex(const basic_graph<W>& g) {
    if (g.vertex_count() == 0) throw precondition_error("empty graph has no vertices");
    int best = 0, best_deg = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d < best_deg) { best = v; best_deg = d; }
    }
    return {best, best_deg};
}

} // namespace tp
