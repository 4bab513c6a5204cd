#pragma once

// Random fixtures shared by the unit and acceptance suites.  Generators keep
// skew ratios away from 1 so A == G happens only for deliberately symmetric
// fixtures, and endpoint magnitudes stay in a benign numeric range.

#include <cstdint>
#include <vector>

#include "hoeffding/interval.hpp"
#include "hoeffding/rng.hpp"
#include "hoeffding/tail_bounds.hpp"

namespace hoeffding::testing {

inline double magnitude(SplitMix64& g) {
    return 0.05 + 7.95 * g.next_double();
}

inline double skew_ratio(SplitMix64& g) {
    return 1.05 + 3.95 * g.next_double();
}

// b < -a strictly
inline Interval random_left_skewed(SplitMix64& g) {
    const double b = magnitude(g);
    return Interval(-b * skew_ratio(g), b);
}

// b > -a strictly
inline Interval random_right_skewed(SplitMix64& g) {
    const double b = magnitude(g);
    return Interval(-b / skew_ratio(g), b);
}

inline Interval random_symmetric(SplitMix64& g) {
    const double b = magnitude(g);
    return Interval(-b, b);
}

// Mixes both skews plus the exact tie case.
inline Interval random_interval(SplitMix64& g) {
    switch (g.next() % 8) {
        case 0: return random_symmetric(g);
        case 1:
        case 2:
        case 3: return random_left_skewed(g);
        default: return random_right_skewed(g);
    }
}

inline IntervalSet random_set(SplitMix64& g, std::size_t min_n, std::size_t max_n) {
    const std::size_t n = min_n + g.next() % (max_n - min_n + 1);
    std::vector<Interval> items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        items.push_back(random_interval(g));
    }
    return IntervalSet(std::move(items));
}

}  // namespace hoeffding::testing
