#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tp/barcode.hpp"
#include "tp/cliques.hpp"
#include "tp/filtration.hpp"
#include "tp/graph.hpp"
#include "tp/homology.hpp"
#include "tp/matrix.hpp"
#include "tp/report.hpp"

namespace tp {

namespace detail {

// Simplices of one dimension in filtration order. A simplex appears at the
// largest index of its edges; vertices appear at index 1. Ties are broken
// by colex rank, which refines any faces-before-cofaces order within a step.
template <class W>
struct filtered_dim {
    std::vector<W> masks;               // sorted by (filtration value, rank)
    std::vector<std::int64_t> values;   // filtration value per simplex
    std::vector<std::int64_t> position; // rank-sorted position -> filtered position
};

template <class W>
std::int64_t simplex_filtration_value(W mask, const std::vector<std::vector<int>>& edge_index) {
    std::vector<int> verts;
    for_each_bit(mask, [&](int v) { verts.push_back(v); });
    if (verts.size() <= 1) return 1;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            value = std::max<std::int64_t>(value, edge_index[verts[i]][verts[j]]);
    return value;
}

template <class W>
filtered_dim<W> build_filtered_dim(const basic_clique_table<W>& table, int d,
                                   const std::vector<std::vector<int>>& edge_index) {
    filtered_dim<W> out;
    const auto& masks = table.masks(d);
    std::vector<std::size_t> order(masks.size());
    std::vector<std::int64_t> values(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        order[i] = i;
        values[i] = simplex_filtration_value(masks[i], edge_index);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] != values[b] ? values[a] < values[b] : a < b;
    });
    out.masks.resize(masks.size());
    out.values.resize(masks.size());
    out.position.assign(masks.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.masks[i] = masks[order[i]];
        out.values[i] = values[order[i]];
        out.position[order[i]] = static_cast<std::int64_t>(i);
    }
    return out;
}

// Boundary of the dim-d simplices against the filtered (d-1) positions.
template <class W>
sparse_matrix filtered_boundary(const basic_clique_table<W>& table, int d,
                                const filtered_dim<W>& cols, const filtered_dim<W>& rows,
                                const field_spec& f) {
    sparse_matrix m;
    m.rows = static_cast<std::uint32_t>(rows.masks.size());
    m.cols.reserve(cols.masks.size());
    for (const W mask : cols.masks) {
        std::vector<int> verts;
        for_each_bit(mask, [&](int v) { verts.push_back(v); });
        sparse_matrix::column col;
        if (d == 0) {
            col.push_back({0, 1});
        } else {
            for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
                const W face = mask & ~bit<W>(verts[i]);
                const std::int64_t rank_pos = table.position(d - 1, simplex_rank(face));
                const std::int64_t row = rows.position[rank_pos];
                const std::uint16_t coeff = (i % 2 == 0) ? 1 : f.neg(1);
                col.push_back({static_cast<std::uint32_t>(row), coeff});
            }
            std::sort(col.begin(), col.end(),
                      [](const sparse_matrix::entry& a, const sparse_matrix::entry& b) {
                          return a.row < b.row;
                      });
        }
        m.cols.push_back(std::move(col));
    }
    return m;
}

template <class W>
struct persistence_state {
    filtered_dim<W> dim_k, dim_k1;
    std::vector<bool> creator;          // dim_k position -> created a cycle
    std::vector<std::int64_t> death;    // dim_k position -> death value or bar::inf
    std::vector<sparse_matrix::column> cycle_basis; // V columns of the degree-k reduction
};

template <class W>
persistence_state<W> run_persistence(const basic_edgewise_filtration<W>& f, int k,
                                     const field_spec& field, bool want_cycles) {
    if (k < 0) throw precondition_error("flag_persistence requires k >= 0");
    const basic_graph<W> g = f.final_graph();
    const int n = g.vertex_count();
    const auto table = enumerate_cliques(g, k + 1);

    std::vector<std::vector<int>> edge_index(n, std::vector<int>(n, 0));
    {
        const auto& edges = f.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            edge_index[edges[i].first][edges[i].second] = static_cast<int>(i) + 1;
            edge_index[edges[i].second][edges[i].first] = static_cast<int>(i) + 1;
        }
    }

    persistence_state<W> st;
    st.dim_k = build_filtered_dim(table, k, edge_index);
    st.dim_k1 = k + 1 <= table.max_dim() ? build_filtered_dim(table, k + 1, edge_index)
                                         : filtered_dim<W>{};

    // Degree-k births: columns of the degree-k boundary that reduce to zero.
    {
        filtered_dim<W> rows;
        sparse_matrix bk;
        if (k == 0) {
            bk.rows = 1;
            bk.cols.assign(st.dim_k.masks.size(), {{0, 1}});
        } else {
            rows = build_filtered_dim(table, k - 1, edge_index);
            bk = filtered_boundary(table, k, st.dim_k, rows, field);
        }
        auto red = reduce(bk, field, want_cycles ? &st.cycle_basis : nullptr);
        st.creator.resize(st.dim_k.masks.size());
        for (std::size_t j = 0; j < st.creator.size(); ++j) st.creator[j] = red.low[j] < 0;
    }

    // Degree-k deaths: pivots of the degree-(k+1) boundary.
    st.death.assign(st.dim_k.masks.size(), bar::inf);
    if (!st.dim_k1.masks.empty()) {
        sparse_matrix bk1 = filtered_boundary(table, k + 1, st.dim_k1, st.dim_k, field);
        auto red = reduce(bk1, field);
        for (std::size_t j = 0; j < red.low.size(); ++j)
            if (red.low[j] >= 0) st.death[red.low[j]] = st.dim_k1.values[j];
    }
    return st;
}

} // namespace detail

/// Degree-k barcode of the flag filtration; zero-length intervals are
/// discarded.
template <class W>
barcode flag_persistence(const basic_edgewise_filtration<W>& f, int k, const field_spec& field) {
    const auto st = detail::run_persistence(f, k, field, false);
    barcode b;
    b.degree = k;
    for (std::size_t i = 0; i < st.creator.size(); ++i) {
        if (!st.creator[i]) continue;
        const bar iv{st.dim_k.values[i], st.death[i]};
        if (iv.death > iv.birth) b.intervals.push_back(iv);
    }
    b.sort();
    return b;
}

/// Betti numbers of every prefix, recomputed independently of the barcode;
/// the pointwise rank function of flag_persistence must agree with it.
template <class W>
std::vector<std::int64_t> betti_curve(const basic_edgewise_filtration<W>& f, int k,
                                      const field_spec& field) {
    std::vector<std::int64_t> curve;
    curve.reserve(static_cast<std::size_t>(f.size()));
    for (int i = 1; i <= f.size(); ++i) curve.push_back(betti(f.prefix(i), k, field));
    return curve;
}

/// A degree-1 cycle as an edge -> coefficient map.
using cycle = std::map<std::pair<int, int>, std::uint16_t>;

struct represented_bar {
    bar interval;
    cycle chain;
};

/// One representative cycle per nonzero degree-1 interval, born at the
/// interval's birth index; representatives are linearly independent and the
/// latest edge of each equals its birth step.
template <class W>
std::vector<represented_bar> representative_cycles(const basic_edgewise_filtration<W>& f,
                                                   const field_spec& field) {
    const auto st = detail::run_persistence(f, 1, field, true);
    std::vector<represented_bar> out;
    for (std::size_t i = 0; i < st.creator.size(); ++i) {
        if (!st.creator[i]) continue;
        const bar iv{st.dim_k.values[i], st.death[i]};
        if (iv.death <= iv.birth) continue;
        represented_bar rb;
        rb.interval = iv;
        for (const auto& e : st.cycle_basis[i]) {
            const auto mask = st.dim_k.masks[e.row];
            std::vector<int> verts;
            for_each_bit(mask, [&](int v) { verts.push_back(v); });
            rb.chain[{verts[0], verts[1]}] = e.coeff;
        }
        out.push_back(std::move(rb));
    }
    return out;
}

/// Rewrites a family of 1-cycles until their supporting graph is
/// triangle-free: repeatedly take the lexicographically smallest triangle
/// {v1,v2,v3} of the support, push every cycle off the edge {v2,v3} via
/// the triangle boundary, and delete that edge. Homology classes within
/// the support are preserved, so the cycle count is not reduced.
template <class W = std::uint64_t>
basic_graph<W> reduce_support_triangle_free(int n, std::vector<cycle>& cycles,
                                            const field_spec& field) {
    basic_graph<W> h(n);
    for (const auto& c : cycles)
        for (const auto& [edge, coeff] : c)
            if (coeff) h.add_edge(edge.first, edge.second);

    auto smallest_triangle = [&]() -> std::vector<int> {
        for (int v1 = 0; v1 < n; ++v1)
            for (int v2 = v1 + 1; v2 < n; ++v2) {
                if (!h.has_edge(v1, v2)) continue;
                const W common = h.neighbors(v1) & h.neighbors(v2) & above_mask<W>(v2);
                if (common) return {v1, v2, countr_zero(common)};
            }
        return {};
    };

    while (true) {
        const auto tri = smallest_triangle();
        if (tri.empty()) break;
        const int v1 = tri[0], v2 = tri[1], v3 = tri[2];
        // boundary of {v1,v2,v3}: +{v2,v3} -{v1,v3} +{v1,v2}
        for (auto& c : cycles) {
            auto it = c.find({v2, v3});
            if (it == c.end() || it->second == 0) continue;
            const std::uint16_t mu = it->second;
            auto adjust = [&](int a, int b, std::uint16_t tri_coeff) {
                auto& coeff = c[{a, b}];
                coeff = field.sub(coeff, field.mul(mu, tri_coeff));
                if (coeff == 0) c.erase({a, b});
            };
            adjust(v2, v3, 1);
            adjust(v1, v3, field.neg(1));
            adjust(v1, v2, 1);
        }
        h.remove_edge(v2, v3);
    }
    return h;
}

/// Triangle-free subgraph of the final graph supporting |B_1| independent
/// cycles, built from the representative-cycle supports. With the
/// representatives produced here (fundamental cycles over the forest of
/// component-merging edges) the union is already triangle-free, but the
/// rewrite pass guards any alternative representative choice.
template <class W>
basic_graph<W> triangle_free_support(const basic_edgewise_filtration<W>& f,
                                     const field_spec& field) {
    std::vector<cycle> cycles;
    for (auto& rb : representative_cycles(f, field)) cycles.push_back(std::move(rb.chain));
    return reduce_support_triangle_free<W>(f.vertex_count(), cycles, field);
}

/// Checks the interval bounds for a barcode coming from an n-vertex
/// filtration: births at or after 2k(k+1), and classes never alive past
/// index C(n-1,2)+k. The horizon (filtration length) is needed to place
/// still-alive classes; pass horizon < 0 to skip that side for them.
inline verification_report bar_bounds_check(const barcode& b, int n, int k,
                                            std::int64_t horizon = -1) {
    nlohmann::ordered_json params{{"n", n}, {"k", k}};
    if (horizon >= 0) params["horizon"] = horizon;
    if (b.degree != k)
        return verification_report::failed("bar-bounds", params,
                                           {{"reason", "degree mismatch"}, {"degree", b.degree}});
    const std::int64_t min_birth = 2LL * k * (k + 1);
    const std::int64_t max_alive = choose2(n - 1) + k;
    std::int64_t largest_death = 0;
    bool any_infinite = false;
    for (const bar& iv : b.intervals) {
        if (iv.finite())
            largest_death = std::max(largest_death, iv.death);
        else
            any_infinite = true;
        const std::int64_t last_alive =
            iv.finite() ? iv.death - 1 : (horizon >= 0 ? horizon : -1);
        if (iv.birth < min_birth || (last_alive >= 0 && last_alive > max_alive)) {
            nlohmann::ordered_json w{{"birth", iv.birth},
                                     {"min_birth", min_birth},
                                     {"max_alive_index", max_alive}};
            w["death"] = iv.finite() ? nlohmann::ordered_json(iv.death) : "inf";
            return verification_report::failed("bar-bounds", params, std::move(w));
        }
    }
    auto r = verification_report::passed("bar-bounds", params);
    r.witness = nlohmann::ordered_json{
        {"largest_finite_death", largest_death},
        {"has_infinite", any_infinite},
    };
    return r;
}

} // namespace tp
