#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace tp {

namespace detail {

inline constexpr int binom_max_n = 130;

struct binom_table {
    // Saturating Pascal triangle; entries that would overflow are pinned
    // to max() so callers comparing against work budgets stay safe.
    std::array<std::array<std::uint64_t, binom_max_n + 1>, binom_max_n + 1> c{};

    binom_table() {
        constexpr auto sat = std::numeric_limits<std::uint64_t>::max();
        for (int n = 0; n <= binom_max_n; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                const std::uint64_t a = c[n - 1][k - 1];
                const std::uint64_t b = k <= n - 1 ? c[n - 1][k] : 0;
                c[n][k] = (a > sat - b) ? sat : a + b;
            }
        }
    }
};

} // namespace detail

inline std::uint64_t binom(int n, int k) {
    static const detail::binom_table table;
    if (n < 0 || k < 0 || k > n) return 0;
    return table.c[n][k];
}

// n*(n-1)/2 without the table bound.
inline std::int64_t choose2(std::int64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

} // namespace tp
