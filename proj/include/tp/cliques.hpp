#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tp/binomial.hpp"
#include "tp/bits.hpp"
#include "tp/errors.hpp"
#include "tp/graph.hpp"

namespace tp {

/// Colex rank of a vertex set in the combinatorial number system:
/// sum of C(v_i, i+1) over the sorted vertices v_0 < v_1 < ... < v_d.
template <class W>
std::uint64_t simplex_rank(W mask) {
    std::uint64_t rank = 0;
    int i = 0;
    for_each_bit(mask, [&](int v) { rank += binom(v, ++i); });
    return rank;
}

/// All cliques of the source graph up to a dimension cap, one sorted
/// list per dimension (d-simplices are (d+1)-cliques), ordered by colex
/// rank.
template <class W>
class basic_clique_table {
public:
    basic_clique_table(int n, int max_dim)
        : n_(n), masks_(static_cast<std::size_t>(max_dim) + 1),
          ranks_(static_cast<std::size_t>(max_dim) + 1) {}

    int vertex_count() const { return n_; }
    int max_dim() const { return static_cast<int>(masks_.size()) - 1; }

    std::int64_t count(int d) const {
        return d < 0 || d > max_dim() ? 0 : static_cast<std::int64_t>(masks_[d].size());
    }
    const std::vector<W>& masks(int d) const { return masks_[d]; }
    const std::vector<std::uint64_t>& ranks(int d) const { return ranks_[d]; }

    /// Position of the simplex with the given rank within dimension d.
    std::int64_t position(int d, std::uint64_t rank) const {
        const auto& r = ranks_[d];
        const auto it = std::lower_bound(r.begin(), r.end(), rank);
        return (it != r.end() && *it == rank) ? it - r.begin() : -1;
    }

    void set_dim(int d, std::vector<W> masks, std::vector<std::uint64_t> ranks) {
        masks_[d] = std::move(masks);
        ranks_[d] = std::move(ranks);
    }

private:
    int n_;
    std::vector<std::vector<W>> masks_;
    std::vector<std::vector<std::uint64_t>> ranks_;
};

using clique_table = basic_clique_table<std::uint64_t>;

/// Ordered clique expansion: every clique is grown only by neighbors above
/// its maximum vertex, so each clique is produced exactly once.
template <class W>
basic_clique_table<W> enumerate_cliques(const basic_graph<W>& g, int max_dim) {
    if (max_dim < 0) throw precondition_error("max_dim must be >= 0");
    const int n = g.vertex_count();
    basic_clique_table<W> table(n, max_dim);

    std::vector<W> masks, ext;
    std::vector<std::uint64_t> ranks;
    for (int v = 0; v < n; ++v) {
        masks.push_back(bit<W>(v));
        ext.push_back(g.neighbors(v) & above_mask<W>(v));
        ranks.push_back(static_cast<std::uint64_t>(v));
    }
    table.set_dim(0, masks, ranks);

    for (int d = 1; d <= max_dim && !masks.empty(); ++d) {
        std::vector<W> next_masks, next_ext;
        std::vector<std::uint64_t> next_ranks;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            for_each_bit(ext[i], [&](int v) {
                next_masks.push_back(masks[i] | bit<W>(v));
                next_ext.push_back(ext[i] & g.neighbors(v) & above_mask<W>(v));
                next_ranks.push_back(simplex_rank(next_masks.back()));
            });
        }
        std::vector<std::size_t> order(next_masks.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return next_ranks[a] < next_ranks[b]; });
        std::vector<W> sorted_masks(order.size()), sorted_ext(order.size());
        std::vector<std::uint64_t> sorted_ranks(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sorted_masks[i] = next_masks[order[i]];
            sorted_ext[i] = next_ext[order[i]];
            sorted_ranks[i] = next_ranks[order[i]];
        }
        table.set_dim(d, sorted_masks, sorted_ranks);
        masks = std::move(sorted_masks);
        ext = std::move(sorted_ext);
        ranks = std::move(sorted_ranks);
    }
    return table;
}

} // namespace tp
