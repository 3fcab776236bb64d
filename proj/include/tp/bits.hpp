#pragma once

#include <bit>
#include <cstdint>

namespace tp {

// Word-level helpers shared by the 64- and 128-bit graph instantiations.

template <class W>
inline constexpr int word_bits = static_cast<int>(sizeof(W) * 8);

template <class W>
constexpr int popcount(W x) {
    if constexpr (sizeof(W) <= 8) {
        return std::popcount(static_cast<std::uint64_t>(x));
    } else {
        return std::popcount(static_cast<std::uint64_t>(x)) +
               std::popcount(static_cast<std::uint64_t>(x >> 64));
    }
}

template <class W>
constexpr int countr_zero(W x) {
    if constexpr (sizeof(W) <= 8) {
        return std::countr_zero(static_cast<std::uint64_t>(x));
    } else {
        const auto lo = static_cast<std::uint64_t>(x);
        return lo ? std::countr_zero(lo)
                  : 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
    }
}

template <class W>
constexpr W bit(int i) {
    return W(1) << i;
}

// Bits 0..i-1.
template <class W>
constexpr W low_mask(int i) {
    return i >= word_bits<W> ? W(~W(0)) : W(bit<W>(i) - 1);
}

// Bits strictly above i.
template <class W>
constexpr W above_mask(int i) {
    return ~low_mask<W>(i + 1);
}

// Calls fn(v) for every set bit v of mask, ascending.
template <class W, class Fn>
void for_each_bit(W mask, Fn&& fn) {
    while (mask) {
        const int v = countr_zero(mask);
        fn(v);
        mask &= mask - 1;
    }
}

} // namespace tp
