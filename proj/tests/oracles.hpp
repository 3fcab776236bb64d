// Test-only brute-force oracles, independent of the library's bitmask and
// reduction code paths.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tp/field.hpp"
#include "tp/graph.hpp"
#include "tp/matrix.hpp"

namespace oracles {

// Counts (d+1)-cliques by checking all vertex subsets pairwise.
template <class W>
std::int64_t count_cliques_naive(const tp::basic_graph<W>& g, int d) {
    const int n = g.vertex_count();
    const int size = d + 1;
    std::vector<int> pick;
    std::int64_t count = 0;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == size) {
            ++count;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (ok) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        }
    };
    rec(rec, 0);
    return count;
}

// All compositions of S into exactly parts positive integers.
inline void for_each_composition(std::int64_t S, int parts,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> xs;
    auto rec = [&](auto&& self, std::int64_t left, int remaining) -> void {
        if (remaining == 1) {
            if (left >= 1) {
                xs.push_back(left);
                fn(xs);
                xs.pop_back();
            }
            return;
        }
        for (std::int64_t x = 1; x + (remaining - 1) <= left; ++x) {
            xs.push_back(x);
            self(self, left - x, remaining - 1);
            xs.pop_back();
        }
    };
    rec(rec, S, parts);
}

// Dense product of two sparse column matrices over F_p; returns true when
// a * b = 0.
inline bool product_is_zero(const tp::sparse_matrix& a, const tp::sparse_matrix& b,
                            const tp::field_spec& f) {
    for (const auto& col : b.cols) {
        std::vector<std::uint16_t> acc(a.rows, 0);
        for (const auto& e : col)
            for (const auto& ae : a.cols[e.row])
                acc[ae.row] = f.add(acc[ae.row], f.mul(ae.coeff, e.coeff));
        for (const auto v : acc)
            if (v) return false;
    }
    return true;
}

} // namespace oracles
