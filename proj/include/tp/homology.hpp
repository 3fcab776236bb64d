#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tp/cliques.hpp"
#include "tp/field.hpp"
#include "tp/graph.hpp"
#include "tp/matrix.hpp"

namespace tp {

/// Simplicial boundary of the d-simplices in the table, with alternating
/// signs mod p. Homology is reduced: the d=0 boundary maps every vertex to
/// the empty simplex (a single extra row).
template <class W>
sparse_matrix boundary_matrix(const basic_clique_table<W>& table, int d, const field_spec& f) {
    if (d < 0 || d > table.max_dim()) throw precondition_error("dimension out of range");
    sparse_matrix m;
    if (d == 0) {
        m.rows = 1;
        m.cols.assign(static_cast<std::size_t>(table.count(0)), {{0, 1}});
        return m;
    }
    m.rows = static_cast<std::uint32_t>(table.count(d - 1));
    m.cols.reserve(static_cast<std::size_t>(table.count(d)));
    for (const W mask : table.masks(d)) {
        std::vector<int> verts;
        for_each_bit(mask, [&](int v) { verts.push_back(v); });
        sparse_matrix::column col;
        col.reserve(verts.size());
        // Deleting vertices from the largest down yields faces in
        // increasing colex-rank order, so rows stay sorted.
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            const W face = mask & ~bit<W>(verts[i]);
            const std::int64_t row = table.position(d - 1, simplex_rank(face));
            if (row < 0) throw precondition_error("face missing from clique table");
            const std::uint16_t coeff = (i % 2 == 0) ? 1 : f.neg(1);
            col.push_back({static_cast<std::uint32_t>(row), coeff});
        }
        m.cols.push_back(std::move(col));
    }
    return m;
}

/// Reduced Betti number of the flag complex of g in degree k >= -1.
/// Only cliques up to size k+2 can influence it, so the enumeration is
/// capped at dimension k+1.
template <class W>
std::int64_t betti(const basic_graph<W>& g, int k, const field_spec& f) {
    if (k < -1) throw precondition_error("betti requires k >= -1");
    if (k == -1) return g.vertex_count() == 0 ? 1 : 0;
    const auto table = enumerate_cliques(g, k + 1);
    const std::int64_t nk = table.count(k);
    if (nk == 0) return 0;
    const std::int64_t rank_k = rank(boundary_matrix(table, k, f), f);
    const std::int64_t rank_k1 =
        table.count(k + 1) > 0 ? rank(boundary_matrix(table, k + 1, f), f) : 0;
    return nk - rank_k - rank_k1;
}

/// Betti number of the independence complex Ind(g) = X(complement of g).
template <class W>
std::int64_t betti_independence(const basic_graph<W>& g, int k, const field_spec& f) {
    return betti(complement(g), k, f);
}

/// Betti numbers of T_{n,k}: nonzero only in degree k-1, where the value is
/// the product of (class size - 1) over the k classes. Empty graphs
/// contribute 0 in every degree >= 0.
inline std::int64_t turan_betti_closed_form(int n, int k, int i) {
    if (n < 0 || k < 1 || i < 0) throw precondition_error("bad turan_betti_closed_form arguments");
    if (n == 0 || i != k - 1) return 0;
    const std::int64_t a = (n + k - 1) / k;
    const std::int64_t b = n / k;
    const std::int64_t np = (n % k == 0) ? k : n % k;
    std::int64_t prod = 1;
    for (std::int64_t c = 0; c < np; ++c) prod *= a - 1;
    for (std::int64_t c = np; c < k; ++c) prod *= b - 1;
    return prod;
}

/// Upper bound for beta_k over all graphs on n vertices; attained by
/// T_{n,k+1}.
inline std::int64_t max_betti_upper_bound(int n, int k) {
    if (n < 1 || k < 0) throw precondition_error("bad max_betti_upper_bound arguments");
    return turan_betti_closed_form(n, k + 1, k);
}

/// The balanced composition of S into n parts, ceil parts first; maximizes
/// the product of (part - 1) over all compositions.
inline std::vector<std::int64_t> balanced_partition(std::int64_t S, std::int64_t n) {
    if (n < 1 || S < n) throw precondition_error("balanced_partition requires S >= n >= 1");
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(n));
    const std::int64_t hi = S % n;
    for (std::int64_t i = 0; i < n; ++i) parts.push_back(i < hi ? S / n + 1 : S / n);
    return parts;
}

/// beta_1 of a graph with a complete bipartite spanning subgraph, as the
/// product of (component count - 1) over the two sides. Every cross edge
/// must be present.
template <class W>
std::int64_t bipartite_betti1(const basic_graph<W>& g, const basic_vertex_partition<W>& part) {
    if (part.classes.size() != 2 || part.n != g.vertex_count() || !part.valid())
        throw precondition_error("bipartite_betti1 requires a valid 2-class partition");
    for_each_bit(part.classes[0], [&](int u) {
        for_each_bit(part.classes[1], [&](int v) {
            if (!g.has_edge(u, v))
                throw precondition_error("missing cross edge {" + std::to_string(u) + "," +
                                         std::to_string(v) + "}");
        });
    });
    const std::int64_t d1 = connected_component_count(g, part.classes[0]);
    const std::int64_t d2 = connected_component_count(g, part.classes[1]);
    return (d1 - 1) * (d2 - 1);
}

/// Any graph on n vertices with strictly more edges has beta_k = 0.
inline std::int64_t vanishing_edge_threshold(int n, int k) {
    if (n < 1 || k < 0) throw precondition_error("bad vanishing_edge_threshold arguments");
    return choose2(n - 1) + k;
}

} // namespace tp
