#include <catch2/catch_amalgamated.hpp>

#include "tp/canonical.hpp"
#include "tp/graph.hpp"
#include "tp/homology.hpp"
#include "tp/rng.hpp"

using tp::graph;

namespace {

// Independent edge counter: iterates all pairs, no bit tricks.
template <class W>
std::int64_t count_edges_naive(const tp::basic_graph<W>& g) {
    std::int64_t m = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) ++m;
    return m;
}

} // namespace

TEST_CASE("complement basics", "[graph]") {
    CHECK(tp::complement(tp::complete(6)).edge_count() == 0);

    // Complement of the Turan graph: disjoint cliques of near-equal size.
    const auto [t, part] = tp::turan(8, 3);
    const auto c = tp::complement(t);
    CHECK(c.edge_count() == 3 + 3 + 1);  // K_3, K_3, K_2
    CHECK(tp::connected_component_count(c) == 3);

    tp::rng r(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(r.below(12));
        const auto g = tp::random_graph(n, static_cast<std::int64_t>(r.below(tp::choose2(n) + 1)), r);
        CHECK(tp::complement(tp::complement(g)) == g);
    }
}

TEST_CASE("join and disjoint union", "[graph]") {
    const auto k35 = tp::join(graph(3), graph(5));
    CHECK(k35.edge_count() == 15);
    CHECK(k35 == tp::complete_bipartite(3, 5));

    // Edge count of a join adds the cross edges.
    const auto g1 = tp::star(4);
    const auto g2 = tp::complete(3);
    CHECK(tp::join(g1, g2).edge_count() == g1.edge_count() + g2.edge_count() + 4 * 3);

    const auto du = tp::disjoint_union(tp::star(4), tp::star(4));
    CHECK(du.edge_count() == 6);
    CHECK(tp::connected_component_count(du) == 2);
    CHECK(tp::disjoint_union(tp::complete(1), tp::complete(1)).edge_count() == 0);

    CHECK_THROWS_AS(tp::join(tp::complete(40), tp::complete(40)), tp::capacity_error);
}

TEST_CASE("turan construction", "[graph]") {
    const auto [t52, p52] = tp::turan(5, 2);
    CHECK(t52.edge_count() == 6);
    CHECK(tp::canonical_form(t52) ==
          tp::canonical_form(tp::complement(tp::disjoint_union(tp::complete(3), tp::complete(2)))));
    CHECK(tp::canonical_form(t52) == tp::canonical_form(tp::complete_bipartite(2, 3)));
    const auto [t82, p82] = tp::turan(8, 2);
    CHECK(t82.edge_count() == 16);
    const auto [t63, p63] = tp::turan(6, 3);
    CHECK(t63.edge_count() == 12);

    // Class sizes differ by at most one and cover everything.
    for (int n = 0; n <= 20; ++n)
        for (int k = 1; k <= 6; ++k) {
            const auto [g, part] = tp::turan(n, k);
            CHECK(part.valid());
            int total = 0, lo = n + 1, hi = 0;
            for (const auto c : part.classes) {
                const int size = tp::popcount(c);
                total += size;
                lo = std::min(lo, size);
                hi = std::max(hi, size);
            }
            CHECK(total == n);
            if (!part.classes.empty()) CHECK(hi - lo <= 1);
            CHECK(g.edge_count() == tp::turan_edge_count(n, k));
            CHECK(g.edge_count() == count_edges_naive(g));
        }
}

TEST_CASE("turan edge count values", "[graph]") {
    CHECK(tp::turan_edge_count(8, 2) == 16);
    CHECK(tp::turan_edge_count(1, 3) == 0);
    CHECK(tp::turan_edge_count(7, 3) == 16);
    // Differences between consecutive vertex counts are the degree of the
    // newly attached vertex.
    for (int k = 1; k <= 5; ++k)
        for (int m = 1; m <= 16; ++m) {
            const auto delta = tp::turan_edge_count(m, k) - tp::turan_edge_count(m - 1, k);
            const auto [g, part] = tp::turan(m, k);
            CHECK(delta == g.degree(m - 1));
        }
}

TEST_CASE("standard graphs", "[graph]") {
    CHECK(tp::star(1) == tp::complete(1));
    CHECK(tp::star(4).edge_count() == 3);
    CHECK(tp::star(4).degree(0) == 3);
    CHECK(tp::complete(5).edge_count() == 10);
}

TEST_CASE("connected components", "[graph]") {
    CHECK(tp::connected_component_count(graph(5)) == 5);
    const auto g = tp::disjoint_union(tp::complete(3), graph(2));
    CHECK(tp::connected_component_count(g) == 3);
    const auto [t82, part] = tp::turan(8, 2);
    CHECK(tp::connected_component_count(t82, part.classes[0]) == 4);
}

TEST_CASE("neighborhood removal", "[graph]") {
    CHECK(tp::remove_closed_neighborhood(tp::complete(6), 2).vertex_count() == 0);
    CHECK(tp::remove_closed_neighborhood(tp::star(4), 0).vertex_count() == 0);
    const auto leaf_removed = tp::remove_closed_neighborhood(tp::star(4), 1);
    CHECK(leaf_removed.vertex_count() == 2);
    CHECK(leaf_removed.edge_count() == 0);

    // Removing a closed neighborhood deletes at least d_i + ceil((u-1)d_i/2)
    // edges when the minimum degree is u.
    tp::rng r(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(r.below(10));
        const auto m = static_cast<std::int64_t>(r.below(tp::choose2(n) + 1));
        const auto g = tp::random_graph(n, m, r);
        const auto [v, u] = tp::min_degree_vertex(g);
        tp::for_each_bit(g.neighbors(v), [&](int vi) {
            const std::int64_t di = g.degree(vi);
            const auto h = tp::remove_closed_neighborhood(g, vi);
            CHECK(h.vertex_count() == n - di - 1);
            CHECK(h.edge_count() <= m - (di + (std::max<std::int64_t>(u - 1, 0) * di + 1) / 2));
        });
    }
}

TEST_CASE("plumbing operations", "[graph]") {
    const auto [v, d] = tp::min_degree_vertex(tp::star(4));
    CHECK(v == 1);  // smallest leaf label
    CHECK(d == 1);
    CHECK(tp::induced(tp::complete(5), tp::low_mask<std::uint64_t>(3)) == tp::complete(3));
    CHECK(tp::delete_vertex(tp::complete(3), 2) == tp::complete(2));
}

TEST_CASE("128-bit instantiation", "[graph]") {
    const auto [t, part] = tp::turan<unsigned __int128>(100, 2);
    CHECK(t.edge_count() == 2500);
    CHECK(t.edge_count() == tp::turan_edge_count(100, 2));
    CHECK(tp::connected_component_count(t) == 1);
    CHECK(tp::complement(tp::complement(t)) == t);

    // The homology stack works on wide words too.
    const auto [t90, p90] = tp::turan<unsigned __int128>(90, 2);
    CHECK(tp::bipartite_betti1(t90, p90) == 44 * 44);
    const auto [t20, p20] = tp::turan<unsigned __int128>(20, 3);
    CHECK(tp::betti(t20, 2, tp::field_spec::gf2()) == tp::turan_betti_closed_form(20, 3, 2));
}
