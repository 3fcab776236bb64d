#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <json.hpp>

#include "tp/errors.hpp"

namespace tp {

/// Half-open interval [birth, death) of filtration indices; death may be
/// infinite. [a,b) means the class is present in steps a..b-1.
struct bar {
    static constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();

    std::int64_t birth = 0;
    std::int64_t death = inf;

    bool finite() const { return death != inf; }

    /// Length when the filtration is cut off after `horizon` steps
    /// (infinite deaths count as horizon + 1).
    std::int64_t length(std::int64_t horizon) const {
        return std::min(death, horizon + 1) - birth;
    }

    friend bool operator==(const bar& a, const bar& b) {
        return a.birth == b.birth && a.death == b.death;
    }
    friend bool operator<(const bar& a, const bar& b) {
        return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    }
};

/// Multiset of intervals for one homology degree, kept sorted by (birth,
/// death) with infinite deaths last.
struct barcode {
    int degree = 0;
    std::vector<bar> intervals;

    void sort() { std::sort(intervals.begin(), intervals.end()); }

    /// Number of intervals containing index i.
    std::int64_t rank_at(std::int64_t i) const {
        std::int64_t r = 0;
        for (const bar& b : intervals) r += (b.birth <= i && i < b.death) ? 1 : 0;
        return r;
    }

    std::vector<std::int64_t> rank_curve(std::int64_t horizon) const {
        std::vector<std::int64_t> curve;
        curve.reserve(static_cast<std::size_t>(horizon));
        for (std::int64_t i = 1; i <= horizon; ++i) curve.push_back(rank_at(i));
        return curve;
    }
};

/// Sum of interval lengths at the given horizon; equals the sum of the
/// Betti numbers over all filtration steps.
inline std::int64_t total_persistence(const barcode& b, std::int64_t horizon) {
    std::int64_t total = 0;
    for (const bar& iv : b.intervals) {
        if (iv.finite() && iv.death > horizon + 1)
            throw precondition_error("horizon below a finite death");
        total += iv.length(horizon);
    }
    return total;
}

inline nlohmann::ordered_json barcode_to_json(const barcode& b) {
    nlohmann::ordered_json j;
    j["degree"] = b.degree;
    auto arr = nlohmann::ordered_json::array();
    for (const bar& iv : b.intervals) {
        if (iv.finite())
            arr.push_back({iv.birth, iv.death});
        else
            arr.push_back({iv.birth, "inf"});
    }
    j["intervals"] = std::move(arr);
    return j;
}

inline barcode barcode_from_json(const nlohmann::json& j) {
    barcode b;
    b.degree = j.at("degree").get<int>();
    for (const auto& iv : j.at("intervals")) {
        bar x;
        x.birth = iv.at(0).get<std::int64_t>();
        x.death = iv.at(1).is_string() ? bar::inf : iv.at(1).get<std::int64_t>();
        b.intervals.push_back(x);
    }
    b.sort();
    return b;
}

} // namespace tp
