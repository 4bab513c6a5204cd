#include "hoeffding/mgf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hoeffding {

namespace {

// Above this the ln(1 + lambda expm1(u)) form risks overflow of e^u long
// before it matters; both branches agree to ~1e-15 at the seam.
constexpr double kPsiSeam = 30.0;

// exp() overflows just above 709.78; keep a small margin for the two-term sum.
constexpr double kMaxExpArg = 709.0;

void require_nonnegative_finite(double x, const char* what) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and nonnegative");
    }
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

}  // namespace

double psi(const Interval& iv, double u) {
    require_nonnegative_finite(u, "u");
    const double lam = iv.lambda();
    if (u <= kPsiSeam) {
        // 1 - lambda + lambda e^u = 1 + lambda (e^u - 1)
        return -lam * u + std::log1p(lam * std::expm1(u));
    }
    // Factor e^u out of the logarithm; exact rewrite that never overflows.
    return (1.0 - lam) * u + std::log(lam + (1.0 - lam) * std::exp(-u));
}

double tau(const Interval& iv, double mu) {
    require_nonnegative_finite(mu, "mu");
    const double lam = iv.lambda();
    return lam / (lam + (1.0 - lam) * std::exp(-mu));
}

double psi_second(const Interval& iv, double mu) {
    const double t = tau(iv, mu);
    return t * (1.0 - t);
}

double psi_quadratic_bound(const Interval& iv, double u) {
    require_nonnegative_finite(u, "u");
    const double lam = iv.lambda();
    const double c = lam <= 0.5 ? 0.25 : lam * (1.0 - lam);
    return 0.5 * c * u * u;
}

double two_point_mgf(const Interval& iv, double s) {
    require_finite(s, "s");
    const double ea = s * iv.a();
    const double eb = s * iv.b();
    if (ea > kMaxExpArg || eb > kMaxExpArg) {
        throw std::overflow_error("two_point_mgf overflows; use log_two_point_mgf");
    }
    const double lam = iv.lambda();
    return (1.0 - lam) * std::exp(ea) + lam * std::exp(eb);
}

double log_two_point_mgf(const Interval& iv, double s) {
    require_finite(s, "s");
    const double lam = iv.lambda();
    const double la = std::log1p(-lam) + s * iv.a();
    const double lb = std::log(lam) + s * iv.b();
    const double hi = std::max(la, lb);
    const double lo = std::min(la, lb);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_mgf_bound(const Interval& iv, double s, MgfBoundKind kind) {
    if (!std::isfinite(s) || s <= 0.0) {
        throw std::invalid_argument(
            "mgf_bound requires s > 0; reflect the interval to bound the lower tail");
    }
    const double sigma = kind == MgfBoundKind::Original
                             ? iv.arithmetic_mean()
                             : iv.subgaussian_scale(TailDirection::Upper);
    const double z = s * sigma;
    return 0.5 * z * z;
}

double mgf_bound(const Interval& iv, double s, MgfBoundKind kind) {
    const double log_bound = log_mgf_bound(iv, s, kind);
    if (log_bound > kMaxExpArg) {
        throw std::overflow_error("mgf_bound overflows; use log_mgf_bound");
    }
    return std::exp(log_bound);
}

}  // namespace hoeffding
