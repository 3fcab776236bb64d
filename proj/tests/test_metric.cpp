#include <catch2/catch_amalgamated.hpp>

#include "tp/metric.hpp"
#include "tp/rng.hpp"

using tp::edgewise_filtration;
using tp::rational;

TEST_CASE("edge distances follow the index formula", "[metric]") {
    edgewise_filtration f(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    const auto mr = tp::metric_realization(f);
    CHECK(mr.at(0, 1) == rational(1, 1));
    CHECK(mr.at(1, 2) == rational(3, 2));
    CHECK(mr.at(2, 3) == rational(5, 3));
    CHECK(mr.at(0, 2) == rational(7, 4));
    CHECK(mr.at(0, 3) == rational(2, 1));  // unfiltered pair
    CHECK(mr.at(1, 3) == rational(2, 1));
    CHECK(mr.at(2, 3) == mr.at(3, 2));
}

TEST_CASE("metric axioms hold with distinct assigned values", "[metric]") {
    tp::rng r(67);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(r.below(9));
        const auto f = tp::random_filtration(n, r.next());
        const auto mr = tp::metric_realization(f);
        CHECK(tp::is_metric(mr));
        // Assigned values increase strictly with the edge index.
        const auto& edges = f.edges();
        for (std::size_t i = 1; i < edges.size(); ++i)
            CHECK(mr.at(edges[i - 1].first, edges[i - 1].second) <
                  mr.at(edges[i].first, edges[i].second));
    }
}

TEST_CASE("vietoris-rips round trip", "[metric]") {
    // Two points: a single-edge filtration.
    edgewise_filtration two(2, {{0, 1}});
    CHECK(tp::vietoris_rips_filtration(tp::metric_realization(two)) == two);

    // Monotone distances reproduce the original edge order.
    edgewise_filtration k3(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto mr = tp::metric_realization(k3);
    CHECK(mr.at(0, 1) == rational(1, 1));
    CHECK(mr.at(1, 2) == rational(3, 2));
    CHECK(mr.at(0, 2) == rational(5, 3));
    CHECK(tp::vietoris_rips_filtration(mr) == k3);

    tp::rng r(71);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(r.below(9));
        const auto f = tp::random_filtration(n, r.next());
        CHECK(tp::vietoris_rips_filtration(tp::metric_realization(f)) == f);
    }

    // Full co-lex filtration of a complete graph.
    auto edges = tp::complete(7).edges();
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    edgewise_filtration colex(7, edges);
    CHECK(tp::vietoris_rips_filtration(tp::metric_realization(colex)) == colex);
}

TEST_CASE("tied distances are rejected", "[metric]") {
    tp::metric_realization_t mr;
    mr.n = 3;
    mr.dist.assign(9, rational(2, 1));
    for (int v = 0; v < 3; ++v) mr.at(v, v) = rational(0, 1);
    mr.at(0, 1) = mr.at(1, 0) = rational(3, 2);
    mr.at(1, 2) = mr.at(2, 1) = rational(3, 2);
    CHECK_THROWS_AS(tp::vietoris_rips_filtration(mr), tp::precondition_error);
}

TEST_CASE("rational arithmetic", "[metric]") {
    CHECK(rational(6, 4) == rational(3, 2));
    CHECK(rational(1, -2) == rational(-1, 2));
    CHECK(rational(1, 2) < rational(2, 3));
    CHECK(rational(1, 2) + rational(1, 3) == rational(5, 6));
    CHECK(rational(7, 4).str() == "7/4");
    CHECK_THROWS_AS(rational(1, 0), tp::precondition_error);
}
