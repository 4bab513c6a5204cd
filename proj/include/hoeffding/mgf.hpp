#pragma once

#include "hoeffding/interval.hpp"

namespace hoeffding {

// Original always uses the arithmetic-mean scale A; Improved switches to the
// geometric-mean scale G on left-skewed supports.
enum class MgfBoundKind { Original, Improved };

// psi(u) = -lambda u + ln(1 - lambda + lambda e^u) for u >= 0.
// psi(0) = 0; the cumulant of the extremal two-point law in the u = s(b-a)
// variable.  Rejects u < 0 and non-finite u.
double psi(const Interval& iv, double u);

// tau(mu) = lambda / (lambda + (1 - lambda) e^{-mu}) for mu >= 0.
// Increasing, tau(0) = lambda exactly, sup 1 (never attained).
double tau(const Interval& iv, double mu);

// psi''(mu) = tau(mu) (1 - tau(mu)), in (0, 1/4].
double psi_second(const Interval& iv, double mu);

// Quadratic envelope of psi: 0.5 c u^2 with c = 1/4 when lambda <= 0.5 and
// c = lambda (1 - lambda) otherwise; psi(u) never exceeds it.
double psi_quadratic_bound(const Interval& iv, double u);

// Exact MGF of the mean-zero two-point law on {a, b}:
// (1 - lambda) e^{sa} + lambda e^{sb}.  Defined for any finite s; at least 1.
// Throws std::overflow_error instead of returning infinity.
double two_point_mgf(const Interval& iv, double s);
double log_two_point_mgf(const Interval& iv, double s);

// exp(0.5 s^2 sigma^2) with sigma = A (Original) or the skew-selected upper
// scale (Improved).  Proven for s > 0 only; callers wanting the lower tail
// must reflect the interval.  The plain variant throws std::overflow_error
// where exp would overflow; the log variant never overflows.
double mgf_bound(const Interval& iv, double s, MgfBoundKind kind);
double log_mgf_bound(const Interval& iv, double s, MgfBoundKind kind);

}  // namespace hoeffding
