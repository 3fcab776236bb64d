#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tp/errors.hpp"
#include "tp/filtration.hpp"

namespace tp {

/// Exact rational with a positive denominator, kept reduced.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    rational() = default;
    rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw precondition_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const rational& a, const rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const rational& a, const rational& b) { return a == b || a < b; }
    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
};

/// Symmetric rational distance matrix with zero diagonal realizing an
/// edgewise filtration as a Vietoris-Rips filtration: the i-th edge sits
/// at distance 2 - 1/i and unfiltered pairs at exactly 2, beyond every
/// assigned value.
struct metric_realization_t {
    int n = 0;
    std::vector<rational> dist;  // row-major n*n

    const rational& at(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
    rational& at(int i, int j) { return dist[static_cast<std::size_t>(i) * n + j]; }
};

template <class W>
metric_realization_t metric_realization(const basic_edgewise_filtration<W>& f) {
    metric_realization_t mr;
    mr.n = f.vertex_count();
    mr.dist.assign(static_cast<std::size_t>(mr.n) * mr.n, rational(2, 1));
    for (int v = 0; v < mr.n; ++v) mr.at(v, v) = rational(0, 1);
    const auto& edges = f.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto idx = static_cast<std::int64_t>(i) + 1;
        const rational d(2 * idx - 1, idx);
        mr.at(edges[i].first, edges[i].second) = d;
        mr.at(edges[i].second, edges[i].first) = d;
    }
    return mr;
}

/// Recovers the edgewise filtration from a metric realization: pairs at
/// distance < 2 sorted by increasing distance. Ties among them make the
/// edge order ill-defined and are rejected.
template <class W = std::uint64_t>
basic_edgewise_filtration<W> vietoris_rips_filtration(const metric_realization_t& mr) {
    struct pair_dist {
        rational d;
        int u, v;
    };
    std::vector<pair_dist> pairs;
    const rational two(2, 1);
    for (int u = 0; u < mr.n; ++u)
        for (int v = u + 1; v < mr.n; ++v)
            if (mr.at(u, v) < two) pairs.push_back({mr.at(u, v), u, v});
    std::sort(pairs.begin(), pairs.end(),
              [](const pair_dist& a, const pair_dist& b) { return a.d < b.d; });
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i - 1].d == pairs[i].d)
            throw precondition_error("tied distances cannot define an edgewise order");
    basic_edgewise_filtration<W> f(mr.n);
    for (const auto& p : pairs) f.push_edge(p.u, p.v);
    return f;
}

/// Exhaustive metric-axiom check (symmetry, zero diagonal, positivity,
/// triangle inequality over all triples).
inline bool is_metric(const metric_realization_t& mr) {
    const rational zero(0, 1);
    for (int i = 0; i < mr.n; ++i) {
        if (!(mr.at(i, i) == zero)) return false;
        for (int j = 0; j < mr.n; ++j) {
            if (i != j && !(zero < mr.at(i, j))) return false;
            if (!(mr.at(i, j) == mr.at(j, i))) return false;
        }
    }
    for (int i = 0; i < mr.n; ++i)
        for (int j = 0; j < mr.n; ++j)
            for (int l = 0; l < mr.n; ++l) {
                if (i == j || j == l || i == l) continue;
                if (!(mr.at(i, l) <= mr.at(i, j) + mr.at(j, l))) return false;
            }
    return true;
}

} // namespace tp
