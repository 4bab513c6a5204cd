#include "hoeffding/tail_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hoeffding {

namespace {

void require_deviation(double t) {
    if (!std::isfinite(t) || t <= 0.0) {
        throw std::invalid_argument("t must be positive and finite");
    }
}

void require_delta(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
}

void require_count(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
}

double log_add_exp(double x, double y) {
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    return hi + std::log1p(std::exp(lo - hi));
}

double sum_deviation(double t, DeviationForm form, std::size_t n) {
    return form == DeviationForm::Mean ? static_cast<double>(n) * t : t;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> items) : items_(std::move(items)) {
    if (items_.empty()) {
        throw std::invalid_argument("interval set must contain at least one interval");
    }
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> index_sets(const IntervalSet& set) {
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        (set[i].skew_class() == SkewClass::Right ? out.first : out.second).push_back(i);
    }
    return out;
}

MixedScales mixed_scales(const IntervalSet& set) {
    MixedScales ms;
    ms.n = set.size();
    for (const Interval& iv : set) {
        const double a = iv.arithmetic_mean();
        const double a_sq = a * a;
        const double g_sq = -iv.a() * iv.b();  // G^2 without the sqrt round trip
        ms.sum_a_sq += a_sq;
        ms.sum_g_sq += g_sq;
        if (iv.skew_class() == SkewClass::Right) {
            ms.m_sq += a_sq;
            ms.n_sq += g_sq;
        } else {
            ms.m_sq += g_sq;
            ms.n_sq += a_sq;
        }
    }
    return ms;
}

MixedScales iid_scales(const Interval& iv, std::int64_t n) {
    require_count(n);
    const double a = iv.arithmetic_mean();
    const double count = static_cast<double>(n);
    MixedScales ms;
    ms.n = static_cast<std::size_t>(n);
    ms.sum_a_sq = count * (a * a);
    ms.sum_g_sq = count * (-iv.a() * iv.b());
    if (iv.skew_class() == SkewClass::Right) {
        ms.m_sq = ms.sum_a_sq;
        ms.n_sq = ms.sum_g_sq;
    } else {
        ms.m_sq = ms.sum_g_sq;
        ms.n_sq = ms.sum_a_sq;
    }
    return ms;
}

double optimal_chernoff_s(const MixedScales& scales, double t_sum, MgfBoundKind kind) {
    return t_sum / scales.one_sided_scale_sq(kind);
}

TailBoundReport one_sided_bound(const MixedScales& scales, double t, DeviationForm form,
                                MgfBoundKind kind) {
    require_deviation(t);
    const double ts = sum_deviation(t, form, scales.n);
    TailBoundReport r;
    r.scales = scales;
    r.sidedness = Sidedness::One;
    r.form = form;
    r.t = t;
    r.log_bound_improved = -ts * ts / (2.0 * scales.m_sq);
    r.log_bound_original = -ts * ts / (2.0 * scales.sum_a_sq);
    r.bound_improved = std::exp(r.log_bound_improved);
    r.bound_original = std::exp(r.log_bound_original);
    r.optimal_s = optimal_chernoff_s(scales, ts, kind);
    return r;
}

TailBoundReport one_sided_bound(const IntervalSet& set, double t, DeviationForm form,
                                MgfBoundKind kind) {
    return one_sided_bound(mixed_scales(set), t, form, kind);
}

TailBoundReport two_sided_bound(const MixedScales& scales, double t, DeviationForm form) {
    require_deviation(t);
    const double ts = sum_deviation(t, form, scales.n);
    TailBoundReport r;
    r.scales = scales;
    r.sidedness = Sidedness::Two;
    r.form = form;
    r.t = t;
    const double log_m = -ts * ts / (2.0 * scales.m_sq);
    const double log_n = -ts * ts / (2.0 * scales.n_sq);
    r.log_bound_improved = std::min(0.0, log_add_exp(log_m, log_n));
    r.log_bound_original = std::min(0.0, std::log(2.0) - ts * ts / (2.0 * scales.sum_a_sq));
    r.bound_improved = std::min(1.0, std::exp(log_m) + std::exp(log_n));
    r.bound_original = std::min(1.0, 2.0 * std::exp(-ts * ts / (2.0 * scales.sum_a_sq)));
    r.optimal_s = optimal_chernoff_s(scales, ts, MgfBoundKind::Improved);
    return r;
}

TailBoundReport two_sided_bound(const IntervalSet& set, double t, DeviationForm form) {
    return two_sided_bound(mixed_scales(set), t, form);
}

double log_iid_one_sided_bound(const Interval& iv, std::int64_t n, double t, DeviationForm form,
                               MgfBoundKind kind) {
    require_count(n);
    require_deviation(t);
    const double sigma = kind == MgfBoundKind::Original
                             ? iv.arithmetic_mean()
                             : iv.subgaussian_scale(TailDirection::Upper);
    const double count = static_cast<double>(n);
    const double t_mean = form == DeviationForm::Mean ? t : t / count;
    const double z = t_mean / sigma;
    return -0.5 * z * z * count;
}

double iid_one_sided_bound(const Interval& iv, std::int64_t n, double t, DeviationForm form,
                           MgfBoundKind kind) {
    return std::exp(log_iid_one_sided_bound(iv, n, t, form, kind));
}

double standardized_bound(double k, std::int64_t n) {
    require_count(n);
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("k must be positive and finite");
    }
    return std::exp(-0.5 * k * k * static_cast<double>(n));
}

std::int64_t invert_for_n(const Interval& iv, double t, double delta, MgfBoundKind kind) {
    require_deviation(t);
    require_delta(delta);
    const double sigma = kind == MgfBoundKind::Original
                             ? iv.arithmetic_mean()
                             : iv.subgaussian_scale(TailDirection::Upper);
    const double n0 = 2.0 * sigma * sigma * std::log(1.0 / delta) / (t * t);
    if (!(n0 < 9.0e18)) {
        throw std::overflow_error("required sample size exceeds the int64 range");
    }
    std::int64_t n = n0 <= 1.0 ? 1 : static_cast<std::int64_t>(std::ceil(n0));
    const double log_delta = std::log(delta);
    const auto small_enough = [&](std::int64_t m) {
        return log_iid_one_sided_bound(iv, m, t, DeviationForm::Mean, kind) <= log_delta;
    };
    // The ceiling can land one off under rounding; walk to the true minimum.
    while (n > 1 && small_enough(n - 1)) --n;
    while (!small_enough(n)) ++n;
    return n;
}

double invert_for_t(const IntervalSet& set, double delta, Sidedness sidedness,
                    MgfBoundKind kind) {
    require_delta(delta);
    const MixedScales ms = mixed_scales(set);
    if (sidedness == Sidedness::One) {
        return std::sqrt(2.0 * ms.one_sided_scale_sq(kind) * std::log(1.0 / delta));
    }
    if (kind == MgfBoundKind::Original) {
        return std::sqrt(2.0 * ms.sum_a_sq * std::log(2.0 / delta));
    }
    // Two-sided Improved: the exponential sum is strictly decreasing in t,
    // so bisect its logarithm against ln(delta).
    const double log_delta = std::log(delta);
    const auto log_two_sided = [&](double t) {
        return log_add_exp(-t * t / (2.0 * ms.m_sq), -t * t / (2.0 * ms.n_sq));
    };
    const double scale_sq = std::max(ms.m_sq, ms.n_sq);
    double hi = std::sqrt(2.0 * scale_sq * std::log(2.0 / delta));
    double lo = 0.5 * hi;
    // Both terms are at most delta/2 at hi, so f(hi) <= ln(delta); grow the
    // bracket downward until f(lo) >= ln(delta) (f -> ln 2 as t -> 0).
    while (log_two_sided(lo) < log_delta) {
        hi = lo;
        lo *= 0.5;
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (log_two_sided(mid) > log_delta ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hoeffding
