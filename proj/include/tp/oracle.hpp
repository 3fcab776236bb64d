#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tp/binomial.hpp"
#include "tp/errors.hpp"
#include "tp/field.hpp"
#include "tp/graph.hpp"
#include "tp/homology.hpp"
#include "tp/parallel.hpp"

namespace tp {

/// Guard rails for brute-force enumeration. The budget bounds the number
/// of graphs a single call may visit; anything larger needs force=true.
struct oracle_caps {
    std::uint64_t work_budget = 1ull << 23;
    bool force = false;
    int workers = 0;  // 0 = resolve from environment/hardware
};

namespace detail {

// Lexicographic m-subsets of {0..slots-1}.

inline std::vector<int> unrank_combination(std::uint64_t rank, int slots, int m) {
    std::vector<int> c(static_cast<std::size_t>(m));
    int x = 0;
    for (int i = 0; i < m; ++i) {
        for (int v = x;; ++v) {
            const std::uint64_t block = binom(slots - 1 - v, m - 1 - i);
            if (rank < block) { c[i] = v; x = v + 1; break; }
            rank -= block;
        }
    }
    return c;
}

inline bool next_combination(std::vector<int>& c, int slots) {
    const int m = static_cast<int>(c.size());
    for (int i = m - 1; i >= 0; --i) {
        if (c[i] < slots - (m - i)) {
            ++c[i];
            for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    slots.reserve(static_cast<std::size_t>(choose2(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    return slots;
}

/// beta_1 over GF(2) via component count and the rank of the
/// triangle-to-edge incidence, with edge subsets as machine words.
/// Used as a fast evaluation inside enumerations; agrees with betti().
template <class W>
std::int64_t beta1_gf2(const basic_graph<W>& g) {
    const int n = g.vertex_count();
    std::int64_t m = 0;
    std::vector<std::vector<int>> eid(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for_each_bit(g.neighbors(u) & above_mask<W>(u), [&](int v) {
            eid[u][v] = static_cast<int>(m++);
        });
    const std::int64_t c = connected_component_count(g);
    std::vector<std::uint64_t> pivot(static_cast<std::size_t>(m), 0);
    std::int64_t rank2 = 0;
    for (int u = 0; u < n; ++u)
        for_each_bit(g.neighbors(u) & above_mask<W>(u), [&](int v) {
            for_each_bit(g.neighbors(u) & g.neighbors(v) & above_mask<W>(v), [&](int w) {
                std::uint64_t col = (1ull << eid[u][v]) | (1ull << eid[u][w]) | (1ull << eid[v][w]);
                while (col) {
                    const int h = 63 - std::countl_zero(col);
                    if (!pivot[h]) { pivot[h] = col; ++rank2; break; }
                    col ^= pivot[h];
                }
            });
        });
    return m - n + c - rank2;
}

} // namespace detail

struct oracle_max_result {
    std::int64_t max_value = 0;
    graph witness;
    std::uint64_t total_graphs = 0;
};

/// Exact maximum of beta_k over all labeled graphs with n vertices and m
/// edges, by enumerating the m-subsets of the C(n,2) edge slots. The
/// witness is the lexicographically smallest maximizer. Deterministic for
/// any worker count.
inline oracle_max_result max_betti_over_graphs(int n, std::int64_t m, int k,
                                               const field_spec& field,
                                               const oracle_caps& caps = {}) {
    if (n < 1 || n > 11) throw precondition_error("oracle enumeration supports 1 <= n <= 11");
    const int slots = static_cast<int>(choose2(n));
    if (m < 0 || m > slots) throw precondition_error("edge count out of range");
    const std::uint64_t total = binom(slots, static_cast<int>(m));
    if (total > caps.work_budget && !caps.force)
        throw oracle_cap_error("enumeration of " + std::to_string(total) +
                               " graphs exceeds the work budget; pass force to override");

    const auto slot_pairs = detail::edge_slots(n);
    const bool fast = (k == 1 && field.characteristic() == 2);

    struct best_t {
        std::int64_t value = -1;
        std::uint64_t rank = ~0ull;
    };
    const int workers = resolve_workers(caps.workers);
    const best_t best = parallel_reduce<best_t>(
        total, workers, best_t{},
        [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
            best_t local;
            if (begin >= end) return local;
            auto combo = detail::unrank_combination(begin, slots, static_cast<int>(m));
            for (std::uint64_t r = begin; r < end; ++r) {
                graph g(n);
                for (int s : combo) g.add_edge(slot_pairs[s].first, slot_pairs[s].second);
                const std::int64_t value = fast ? detail::beta1_gf2(g) : betti(g, k, field);
                if (value > local.value) { local.value = value; local.rank = r; }
                if (r + 1 < end) detail::next_combination(combo, slots);
            }
            return local;
        },
        [](best_t a, best_t b) {
            if (b.value > a.value || (b.value == a.value && b.rank < a.rank)) return b;
            return a;
        });

    oracle_max_result res;
    res.total_graphs = total;
    res.max_value = best.value;
    res.witness = graph(n);
    if (best.rank != ~0ull) {
        for (int s : detail::unrank_combination(best.rank, slots, static_cast<int>(m)))
            res.witness.add_edge(slot_pairs[s].first, slot_pairs[s].second);
    }
    return res;
}

struct sweep_row {
    int n = 0;
    std::int64_t t = 0;
    std::int64_t max_beta1 = 0;
    std::string witness;
};

enum class sweep_mode { exhaustive, structured, automatic };

namespace detail {

/// Fewest vertices (minus one) that a component packing t edges can use;
/// a single clique is always vertex-optimal.
inline std::int64_t clique_pack_cost(std::int64_t t) {
    if (t == 0) return 0;
    std::int64_t s = 2;
    while (choose2(s) < t) ++s;
    return s - 1;
}

inline std::string edge_list_witness(const graph& g) {
    std::string s;
    for (auto [u, v] : g.edges()) {
        if (!s.empty()) s += ';';
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s;
}

} // namespace detail

/// Maximum beta_1 over graphs with a complete bipartite spanning subgraph
/// and (n/2)^2 + t edges. Exhaustive mode enumerates the inside-edge
/// subsets per bipartition and evaluates beta_1 by matrix reduction;
/// structured mode maximizes the component-count product directly via
/// clique packing.
inline sweep_row sweep_bipartite_point(int n, std::int64_t t, sweep_mode mode,
                                       const field_spec& field, const oracle_caps& caps = {}) {
    if (n < 2 || n % 2 != 0) throw precondition_error("sweep requires even n >= 2");
    const std::int64_t base = (static_cast<std::int64_t>(n) / 2) * (n / 2) + t;
    if (t < 0 || base > choose2(n)) throw precondition_error("t out of range");

    sweep_row row{n, t, -1, ""};

    if (mode == sweep_mode::automatic) {
        std::uint64_t work = 0;
        for (int n1 = 2; n1 <= n / 2; ++n1) {
            const std::int64_t inside = base - static_cast<std::int64_t>(n1) * (n - n1);
            const std::int64_t slots = choose2(n1) + choose2(n - n1);
            if (inside < 0 || inside > slots) continue;
            work += binom(static_cast<int>(slots), static_cast<int>(inside));
        }
        mode = (work <= caps.work_budget || caps.force) ? sweep_mode::exhaustive
                                                        : sweep_mode::structured;
    }

    if (mode == sweep_mode::exhaustive) {
        for (int n1 = 2; n1 <= n / 2; ++n1) {
            const int n2 = n - n1;
            const std::int64_t inside = base - static_cast<std::int64_t>(n1) * n2;
            std::vector<std::pair<int, int>> slots;
            for (int u = 0; u < n1; ++u)
                for (int v = u + 1; v < n1; ++v) slots.emplace_back(u, v);
            for (int u = n1; u < n; ++u)
                for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
            if (inside < 0 || inside > static_cast<std::int64_t>(slots.size())) continue;
            const std::uint64_t total =
                binom(static_cast<int>(slots.size()), static_cast<int>(inside));
            if (total > caps.work_budget && !caps.force)
                throw oracle_cap_error("sweep enumeration exceeds the work budget");
            std::vector<int> combo(static_cast<std::size_t>(inside));
            for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = static_cast<int>(i);
            for (std::uint64_t r = 0; r < total; ++r) {
                graph g = complete_bipartite(n1, n2);
                for (int s : combo) g.add_edge(slots[s].first, slots[s].second);
                const std::int64_t value = betti(g, 1, field);
                if (value > row.max_beta1) {
                    row.max_beta1 = value;
                    row.witness = detail::edge_list_witness(g);
                }
                if (r + 1 < total) detail::next_combination(combo, static_cast<int>(slots.size()));
            }
        }
        // A one-vertex side is a cone apex: beta_1 = 0, relevant only when
        // no wider bipartition is feasible.
        if (row.max_beta1 < 0) {
            const std::int64_t inside = base - (n - 1);
            if (inside >= 0 && inside <= choose2(n - 1)) { row.max_beta1 = 0; row.witness = "cone"; }
        }
        return row;
    }

    // Structured mode: by the component-product formula, only the number of
    // vertices consumed by the packed edges matters.
    for (int n1 = 1; n1 <= n / 2; ++n1) {
        const int n2 = n - n1;
        const std::int64_t inside = base - static_cast<std::int64_t>(n1) * n2;
        if (inside < 0) continue;
        for (std::int64_t t1 = 0; t1 <= inside; ++t1) {
            const std::int64_t t2 = inside - t1;
            if (t1 > choose2(n1) || t2 > choose2(n2)) continue;
            const std::int64_t d1 = n1 - detail::clique_pack_cost(t1);
            const std::int64_t d2 = n2 - detail::clique_pack_cost(t2);
            if (d1 < 1 || d2 < 1) continue;
            const std::int64_t value = (d1 - 1) * (d2 - 1);
            if (value > row.max_beta1) {
                row.max_beta1 = value;
                row.witness = "n1=" + std::to_string(n1) + ";t1=" + std::to_string(t1) +
                              ";t2=" + std::to_string(t2);
            }
        }
    }
    return row;
}

inline std::vector<sweep_row> sweep_bipartite_optimum(int n, std::int64_t t_lo, std::int64_t t_hi,
                                                      sweep_mode mode, const field_spec& field,
                                                      const oracle_caps& caps = {}) {
    std::vector<sweep_row> rows;
    for (std::int64_t t = t_lo; t <= t_hi; ++t)
        rows.push_back(sweep_bipartite_point(n, t, mode, field, caps));
    return rows;
}

inline std::string sweep_to_csv(const std::vector<sweep_row>& rows) {
    std::string csv = "n,t,max_beta1,witness\n";
    for (const auto& r : rows)
        csv += std::to_string(r.n) + "," + std::to_string(r.t) + "," +
               std::to_string(r.max_beta1) + "," + r.witness + "\n";
    return csv;
}

} // namespace tp
