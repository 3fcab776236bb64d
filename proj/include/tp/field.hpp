#pragma once

#include <cstdint>

#include "tp/errors.hpp"

namespace tp {

/// Prime field F_p, 2 <= p < 2^16. Coefficients are stored in 0..p-1;
/// inverses go through Fermat's little theorem.
class field_spec {
public:
    explicit field_spec(std::uint32_t p) : p_(static_cast<std::uint16_t>(p)) {
        if (p < 2 || p >= (1u << 16) || !is_prime(p))
            throw precondition_error("field characteristic must be a prime < 2^16");
    }

    static field_spec gf2() { return field_spec(2); }

    std::uint16_t characteristic() const { return p_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
        const std::uint32_t s = std::uint32_t(a) + b;
        return static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
    }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
        return static_cast<std::uint16_t>(a >= b ? a - b : a + p_ - b);
    }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return static_cast<std::uint16_t>((std::uint32_t(a) * b) % p_);
    }
    std::uint16_t neg(std::uint16_t a) const {
        return static_cast<std::uint16_t>(a == 0 ? 0 : p_ - a);
    }

    std::uint16_t inv(std::uint16_t a) const {
        // a^(p-2) by square-and-multiply.
        std::uint32_t base = a % p_, result = 1;
        for (std::uint32_t e = std::uint32_t(p_) - 2; e; e >>= 1) {
            if (e & 1) result = (result * base) % p_;
            base = (base * base) % p_;
        }
        return static_cast<std::uint16_t>(result);
    }

    friend bool operator==(const field_spec& a, const field_spec& b) { return a.p_ == b.p_; }

private:
    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint16_t p_;
};

} // namespace tp
