#include "hoeffding/interval.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hoeffding {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Interval::Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("interval endpoints must be finite, got [" + num(a) +
                                    ", " + num(b) + "]");
    }
    if (!(a < 0.0)) {
        throw std::invalid_argument("interval lower endpoint must be negative, got " + num(a));
    }
    if (!(b > 0.0)) {
        throw std::invalid_argument("interval upper endpoint must be positive, got " + num(b));
    }
    // a < 0 < b already forces a < b; the width can still overflow for
    // endpoints near the double range limits.
    if (!std::isfinite(b - a)) {
        throw std::invalid_argument("interval width b - a overflows");
    }
}

double Interval::geometric_mean() const noexcept {
    return std::sqrt(-a_ * b_);
}

double Interval::subgaussian_scale(TailDirection dir) const {
    if (dir == TailDirection::Lower) {
        return reflected().subgaussian_scale(TailDirection::Upper);
    }
    return skew_class() == SkewClass::Right ? arithmetic_mean() : geometric_mean();
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.a() << ", " << iv.b() << ']';
}

}  // namespace hoeffding
