#pragma once

#include <cstdint>
#include <vector>

#include "tp/field.hpp"

namespace tp {

/// Sparse column matrix over F_p. Row indices are strictly increasing
/// within a column and coefficients lie in 1..p-1.
struct sparse_matrix {
    struct entry {
        std::uint32_t row;
        std::uint16_t coeff;
    };
    using column = std::vector<entry>;

    std::uint32_t rows = 0;
    std::vector<column> cols;
};

namespace detail {

/// a -= lambda * b over F_p, keeping rows sorted.
inline void axpy(sparse_matrix::column& a, const sparse_matrix::column& b, std::uint16_t lambda,
                 const field_spec& f) {
    sparse_matrix::column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].row < a[i].row) {
            const std::uint16_t c = f.neg(f.mul(lambda, b[j].coeff));
            if (c) out.push_back({b[j].row, c});
            ++j;
        } else {
            const std::uint16_t c = f.sub(a[i].coeff, f.mul(lambda, b[j].coeff));
            if (c) out.push_back({a[i].row, c});
            ++i, ++j;
        }
    }
    a = std::move(out);
}

} // namespace detail

struct reduction_result {
    std::uint32_t rank = 0;
    std::vector<std::int64_t> low;           // low[j] = pivot row of column j, or -1
    std::vector<sparse_matrix::column> cols; // reduced columns
};

/// Left-to-right column reduction with a pivot-row -> column map.
/// If basis != nullptr it receives the change-of-basis columns V with
/// R = D * V (V upper unitriangular), needed for representative cycles.
inline reduction_result reduce(const sparse_matrix& m, const field_spec& f,
                               std::vector<sparse_matrix::column>* basis = nullptr) {
    reduction_result res;
    res.low.assign(m.cols.size(), -1);
    res.cols = m.cols;
    std::vector<std::int64_t> pivot_col(m.rows, -1);
    if (basis) {
        basis->assign(m.cols.size(), {});
        for (std::size_t j = 0; j < m.cols.size(); ++j) (*basis)[j] = {{static_cast<std::uint32_t>(j), 1}};
    }
    for (std::size_t j = 0; j < res.cols.size(); ++j) {
        auto& col = res.cols[j];
        while (!col.empty()) {
            const std::uint32_t l = col.back().row;
            const std::int64_t k = pivot_col[l];
            if (k < 0) {
                pivot_col[l] = static_cast<std::int64_t>(j);
                res.low[j] = l;
                ++res.rank;
                break;
            }
            const std::uint16_t lambda = f.mul(col.back().coeff, f.inv(res.cols[k].back().coeff));
            detail::axpy(col, res.cols[k], lambda, f);
            if (basis) detail::axpy((*basis)[j], (*basis)[k], lambda, f);
        }
    }
    return res;
}

inline std::uint32_t rank(const sparse_matrix& m, const field_spec& f) {
    return reduce(m, f).rank;
}

} // namespace tp
