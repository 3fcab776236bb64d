#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tp/errors.hpp"
#include "tp/field.hpp"
#include "tp/filtration.hpp"
#include "tp/graph.hpp"
#include "tp/homology.hpp"
#include "tp/persistence.hpp"

namespace tp {

/// Edgewise filtration of T_{n,k+1} (classes i mod k+1) with edges in
/// co-lexicographic order: sorted by larger endpoint, then smaller. Every
/// vertex prefix of this labeling induces a smaller Turan graph, which is
/// what makes the prefix Betti numbers closed-form.
template <class W = std::uint64_t>
basic_edgewise_filtration<W> h_filtration(int n, int k) {
    if (n < 1 || k < 1) throw precondition_error("h_filtration requires n >= 1, k >= 1");
    auto [g, part] = turan<W>(n, k + 1);
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return basic_edgewise_filtration<W>(n, std::move(edges));
}

/// beta_k of the e-edge prefix of h_filtration(n,k): with m maximal such
/// that the m-vertex Turan graph fits in e edges, the value splits as
/// beta_k(T_{m,k+1}) plus beta_{k-1} of the link Turan graph on the
/// remaining e - e_m edges.
inline std::int64_t h_betti_closed_form(int n, int k, std::int64_t e) {
    if (n < 1 || k < 1) throw precondition_error("h_betti_closed_form requires n >= 1, k >= 1");
    if (e < 1 || e > turan_edge_count(n, k + 1))
        throw precondition_error("edge count out of range");
    int m = 0;
    while (m + 1 <= n && turan_edge_count(m + 1, k + 1) <= e) ++m;
    const std::int64_t rem = e - turan_edge_count(m, k + 1);
    std::int64_t value = turan_betti_closed_form(m, k + 1, k);
    if (rem > 0) value += turan_betti_closed_form(static_cast<int>(rem), k, k - 1);
    return value;
}

/// Within one vertex block of the filtration H, the per-edge increments of
/// beta_k are nondecreasing.
inline bool h_betti_steps_monotone(int n, int k) {
    const std::int64_t total = turan_edge_count(n, k + 1);
    for (int m = 2; m <= n; ++m) {
        const std::int64_t lo = turan_edge_count(m - 1, k + 1);
        const std::int64_t hi = std::min<std::int64_t>(turan_edge_count(m, k + 1), total);
        std::int64_t prev_step = -1;
        for (std::int64_t e = lo + 1; e <= hi; ++e) {
            const std::int64_t step = h_betti_closed_form(n, k, e) -
                                      (e - 1 >= 1 ? h_betti_closed_form(n, k, e - 1) : 0);
            if (prev_step >= 0 && step < prev_step) return false;
            prev_step = step;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Post-Turan filtrations of K_n in degree 1: growth schedules of one clique
// per partition class, encoded either as monotone tuples of clique sizes or
// as a word of unit growth moves.

/// Monotone sequence of (left clique size, right clique size) tuples from
/// (1,1) to (ceil(n/2)-1, floor(n/2)-1).
struct representation {
    int n = 0;
    std::vector<std::pair<int, int>> tuples;

    std::pair<int, int> target() const { return {(n + 1) / 2 - 1, n / 2 - 1}; }

    void validate() const {
        if (n < 4) throw precondition_error("representation requires n >= 4");
        if (tuples.empty() || tuples.front() != std::pair<int, int>{1, 1})
            throw precondition_error("representation must start at (1,1)");
        for (std::size_t i = 1; i < tuples.size(); ++i) {
            if (tuples[i].first < tuples[i - 1].first || tuples[i].second < tuples[i - 1].second)
                throw precondition_error("representation tuples must be nondecreasing");
            if (tuples[i] == tuples[i - 1])
                throw precondition_error("representation tuples must differ");
        }
        if (tuples.back() != target())
            throw precondition_error("representation must end at the boundary-graph tuple");
    }

    std::string str() const {
        std::string s;
        for (auto [l, r] : tuples)
            s += "(" + std::to_string(l) + "," + std::to_string(r) + ")";
        return s;
    }

    friend bool operator==(const representation& a, const representation& b) {
        return a.n == b.n && a.tuples == b.tuples;
    }
};

/// Word over {L,R}: unit clique growths in the left/right class. Normal form
/// of a representation; L count is ceil(n/2)-2 and R count floor(n/2)-2.
struct move_path {
    int n = 0;
    std::string word;

    void validate() const {
        if (n < 4) throw precondition_error("move path requires n >= 4");
        int l = 0, r = 0;
        for (char c : word) {
            if (c == 'L') ++l;
            else if (c == 'R') ++r;
            else throw precondition_error("move path may contain only L and R");
        }
        if (l != (n + 1) / 2 - 2 || r != n / 2 - 2)
            throw precondition_error("move path has wrong move counts for n");
    }

    friend bool operator==(const move_path& a, const move_path& b) {
        return a.n == b.n && a.word == b.word;
    }
};

/// Expands tuples into unit moves, left before right within each tuple.
inline move_path to_move_path(const representation& rep) {
    rep.validate();
    move_path p;
    p.n = rep.n;
    for (std::size_t i = 1; i < rep.tuples.size(); ++i) {
        p.word.append(static_cast<std::size_t>(rep.tuples[i].first - rep.tuples[i - 1].first), 'L');
        p.word.append(static_cast<std::size_t>(rep.tuples[i].second - rep.tuples[i - 1].second), 'R');
    }
    return p;
}

inline representation parse_representation(int n, const std::string& text) {
    representation rep;
    rep.n = n;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw precondition_error("expected '(' in representation");
        const auto comma = text.find(',', i);
        const auto close = text.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw precondition_error("malformed representation tuple");
        rep.tuples.emplace_back(std::stoi(text.substr(i + 1, comma - i - 1)),
                                std::stoi(text.substr(comma + 1, close - comma - 1)));
        i = close + 1;
    }
    rep.validate();
    return rep;
}

/// Realizes a move path as an edgewise filtration of the boundary graph
/// with C(n-1,2)+1 edges: the Turan prefix H^{n,2} followed by the clique
/// growths, each new clique vertex being the smallest unused label in its
/// class and its edges added in ascending label order.
template <class W = std::uint64_t>
basic_edgewise_filtration<W> representation_to_filtration(const move_path& path) {
    path.validate();
    const int n = path.n;
    auto f = h_filtration<W>(n, 1);
    // Left class: even labels; right class: odd labels.
    int l = 1, r = 1;
    auto grow = [&](int side, int size) {
        const int fresh = 2 * size + side;
        for (int j = 0; j < size; ++j) f.push_edge(2 * j + side, fresh);
    };
    for (char c : path.word) {
        if (c == 'L') grow(0, l++);
        else grow(1, r++);
    }
    assert(f.size() == choose2(n - 1) + 1);
    return f;
}

template <class W = std::uint64_t>
basic_edgewise_filtration<W> representation_to_filtration(const representation& rep) {
    return representation_to_filtration<W>(to_move_path(rep));
}

struct move_term {
    char side;            // 'L' or 'R'
    int clique_size;      // clique grown from this size to size+1
    std::int64_t weight;  // component-count factor of the opposite side
    std::int64_t value;   // weight * size * (opposite component factor)
};

/// Per-move contributions to the post-Turan total persistence of degree 1.
/// While a clique grows from size i to i+1 the Betti number stays constant
/// at the product of the two component counts minus one each.
inline std::vector<move_term> post_turan_move_terms(const move_path& path) {
    path.validate();
    const int n = path.n;
    const std::int64_t p = n / 2;
    const bool odd = n % 2 != 0;
    std::vector<move_term> terms;
    std::int64_t l = 1, r = 1;
    for (char c : path.word) {
        move_term t{};
        t.side = c;
        if (c == 'L') {
            t.clique_size = static_cast<int>(l);
            t.weight = p - r;
            t.value = t.weight * l * (odd ? p - l : p - l - 1);
            ++l;
        } else {
            t.clique_size = static_cast<int>(r);
            t.weight = odd ? (p + 1) - l : p - l;
            t.value = t.weight * r * (p - r - 1);
            ++r;
        }
        terms.push_back(t);
    }
    return terms;
}

/// Closed-form sum of beta_1 over the post-Turan steps of the realized
/// filtration (indices e_n+1 .. C(n-1,2)+1).
inline std::int64_t post_turan_total_persistence(const move_path& path) {
    std::int64_t total = 0;
    for (const auto& t : post_turan_move_terms(path)) total += t.value;
    return total;
}

inline std::int64_t post_turan_total_persistence(const representation& rep) {
    return post_turan_total_persistence(to_move_path(rep));
}

/// The representations of maximal total persistence among all filtrations
/// of K_n through T_{n,2}: start both cliques near 3/4 of their class size,
/// then alternate unit growths. Exactly two schedules tie when 8 | n.
inline std::vector<representation> optimal_representations(int n) {
    if (n < 4) throw precondition_error("optimal_representations requires n >= 4");
    const int jn = (3 * n - 2) / 8;
    const int kn = (3 * n + 7) / 8;
    auto alternating = [n](int l0, int r0) {
        representation rep;
        rep.n = n;
        rep.tuples.emplace_back(1, 1);
        auto [lt, rt] = rep.target();
        int l = l0, r = r0;
        while ((l != 1 || r != 1) && l <= lt && r <= rt) {
            if (std::pair<int, int>{l, r} != rep.tuples.back()) rep.tuples.emplace_back(l, r);
            if (l == lt && r == rt) break;
            ++l, ++r;
        }
        rep.validate();
        return rep;
    };
    std::vector<representation> out;
    if (n % 2 == 1) {
        out.push_back(alternating(kn, kn - 1));
    } else if (n % 8 == 0) {
        out.push_back(alternating(jn, jn));
        out.push_back(alternating(jn + 1, jn + 1));
    } else {
        out.push_back(alternating(jn, jn));
    }
    return out;
}

namespace detail {

inline std::int64_t exact_sixth(std::int64_t six_times) {
    assert(six_times % 6 == 0);
    return six_times / 6;
}

} // namespace detail

/// Total-persistence gain from inserting an extra alternation step before
/// depth d when the right clique stopped at w:
/// (1/6)(d-1-w)(d-w)(4d+2w-3p-2). Always an integer.
inline std::int64_t delta_alternation(std::int64_t p, std::int64_t w, std::int64_t d) {
    if (w < 1 || w > d - 1 || d > p - 1)
        throw precondition_error("delta_alternation requires 1 <= w <= d-1 <= p-1");
    return detail::exact_sixth((d - 1 - w) * (d - w) * (4 * d + 2 * w - 3 * p - 2));
}

/// Total-persistence gain from enlarging the first left clique jump j by one
/// when the first right jump is k: (k-1)(j(p-j-1) - k(3p-2k-2)/6).
inline std::int64_t delta_start(std::int64_t p, std::int64_t j, std::int64_t k) {
    if (k < 1 || k > j || j > p - 1)
        throw precondition_error("delta_start requires 1 <= k <= j <= p-1");
    return detail::exact_sixth((k - 1) * (6 * j * (p - j - 1) - k * (3 * p - 2 * k - 2)));
}

/// Mirrors every maximal window of unit states in which the right clique
/// is strictly ahead. The windows are delimited by states with l = r, so a
/// letter is flipped exactly when the state before or after it lies in a
/// window. For even n the realized filtrations are fiberwise isomorphic;
/// for odd n the total persistence can only grow.
inline move_path left_ahead_normalize(const move_path& path) {
    path.validate();
    std::vector<bool> right_ahead;  // state after each letter
    {
        int l = 1, r = 1;
        for (char c : path.word) {
            if (c == 'L') ++l; else ++r;
            right_ahead.push_back(r > l);
        }
    }
    move_path out = path;
    for (std::size_t j = 0; j < out.word.size(); ++j) {
        const bool prev = j > 0 && right_ahead[j - 1];
        if (right_ahead[j] || prev) out.word[j] = out.word[j] == 'L' ? 'R' : 'L';
    }
    out.validate();
    return out;
}

/// Representation form: normalizes the unit expansion and regroups it into
/// maximal blocks of left growths followed by right growths (so redundant
/// tuple boundaries of the input are merged).
inline representation left_ahead_normalize(const representation& rep) {
    const move_path path = left_ahead_normalize(to_move_path(rep));
    representation out;
    out.n = rep.n;
    out.tuples.emplace_back(1, 1);
    int l = 1, r = 1;
    std::size_t i = 0;
    while (i < path.word.size()) {
        while (i < path.word.size() && path.word[i] == 'L') { ++l; ++i; }
        while (i < path.word.size() && path.word[i] == 'R') { ++r; ++i; }
        out.tuples.emplace_back(l, r);
    }
    out.validate();
    return out;
}

/// A graph on n = (k+1)p vertices with C(n-1,2)+k edges and beta_k >= 1
/// (the complement of k+1 disjoint p-vertex stars), plus a filtration of it
/// whose first 2k(k+1) edges build the Turan graph on one center and one
/// leaf per star. The degree-k interval born at step 2k(k+1) and still
/// alive at the last index is certified by a persistence run.
struct max_bar_witness_t {
    graph g;
    edgewise_filtration filtration;
    bar certified;
};

inline max_bar_witness_t max_bar_witness(int n, int k) {
    if (k < 1 || n < 1 || n % (k + 1) != 0)
        throw precondition_error("max_bar_witness requires (k+1) | n");
    const int classes = k + 1;
    const int p = n / classes;
    if (p < 2) throw precondition_error("max_bar_witness requires n/(k+1) >= 2");
    // Vertex label v belongs to star v mod (k+1); labels < k+1 are centers.
    // Complement of the stars: all pairs except center-to-own-leaf.
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool same_star = (u % classes) == (v % classes);
            if (!(same_star && u < classes)) g.add_edge(u, v);
        }

    edgewise_filtration f(n);
    const auto representative_prefix = h_filtration(2 * classes, k);
    for (auto [u, v] : representative_prefix.edges()) f.push_edge(u, v);
    auto rest = g.edges();
    std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (auto [u, v] : rest)
        if (f.edge_index(u, v) == 0) f.push_edge(u, v);

    max_bar_witness_t out{std::move(g), std::move(f), {}};
    assert(out.filtration.size() == choose2(n - 1) + k);
    assert(out.filtration.final_graph() == out.g);

    const auto bc = flag_persistence(out.filtration, k, field_spec::gf2());
    const std::int64_t birth = 2LL * k * (k + 1);
    for (const bar& iv : bc.intervals)
        if (iv.birth == birth && !iv.finite()) {
            out.certified = iv;
            return out;
        }
    throw std::logic_error("max_bar_witness: certification failed");
}

} // namespace tp
