#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hoeffding/interval.hpp"
#include "hoeffding/mgf.hpp"

namespace hoeffding {

// Whether a deviation threshold t refers to the sum S_n or to the sample
// mean S_n / n.  Mean-form t is equivalent to sum-form n*t.
enum class DeviationForm { Sum, Mean };

enum class Sidedness { One, Two };

// Ordered family of supports for a sum of independent zero-mean variables.
class IntervalSet {
  public:
    explicit IntervalSet(std::vector<Interval> items);

    std::size_t size() const noexcept { return items_.size(); }
    const Interval& operator[](std::size_t i) const noexcept { return items_[i]; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

  private:
    std::vector<Interval> items_;
};

// Skew-aware sums of squared per-variable scales.  m_sq collects A^2 over
// right-skewed supports and G^2 over left-skewed ones; n_sq swaps the roles
// (it is the m_sq of the reflected family).
struct MixedScales {
    double m_sq = 0.0;
    double n_sq = 0.0;
    double sum_a_sq = 0.0;
    double sum_g_sq = 0.0;
    std::size_t n = 0;

    double m_bar_sq() const noexcept { return m_sq / static_cast<double>(n); }
    double n_bar_sq() const noexcept { return n_sq / static_cast<double>(n); }
    double a_bar_sq() const noexcept { return sum_a_sq / static_cast<double>(n); }
    double g_bar_sq() const noexcept { return sum_g_sq / static_cast<double>(n); }

    // Squared scale of the one-sided Chernoff exponent for the given kind.
    double one_sided_scale_sq(MgfBoundKind kind) const noexcept {
        return kind == MgfBoundKind::Improved ? m_sq : sum_a_sq;
    }
};

struct TailBoundReport {
    double bound_improved = 1.0;  // clamped into (0, 1]
    double bound_original = 1.0;
    double log_bound_improved = 0.0;  // exact exponents; never underflow
    double log_bound_original = 0.0;
    MixedScales scales;
    double optimal_s = 0.0;  // minimizer of -st + 0.5 s^2 scale^2, i.e. t_sum / scale^2
    Sidedness sidedness = Sidedness::One;
    DeviationForm form = DeviationForm::Sum;
    double t = 0.0;

    double bound(MgfBoundKind kind) const noexcept {
        return kind == MgfBoundKind::Improved ? bound_improved : bound_original;
    }
    double log_bound(MgfBoundKind kind) const noexcept {
        return kind == MgfBoundKind::Improved ? log_bound_improved : log_bound_original;
    }
};

// Partition of indices into (right-skewed, left-skewed); ties go right.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> index_sets(const IntervalSet& set);

MixedScales mixed_scales(const IntervalSet& set);

// Scales of n independent copies of one support.
MixedScales iid_scales(const Interval& iv, std::int64_t n);

// P(S_n >= t)      <= exp(-t^2 / (2 m_sq))     (Improved)
//                  <= exp(-t^2 / (2 sum A^2))  (Original)
// Mean form evaluates the sum form at n*t.  Rejects t <= 0.
TailBoundReport one_sided_bound(const IntervalSet& set, double t, DeviationForm form,
                                MgfBoundKind kind);
TailBoundReport one_sided_bound(const MixedScales& scales, double t, DeviationForm form,
                                MgfBoundKind kind);

// P(|S_n| >= t) <= exp(-t^2 / (2 m_sq)) + exp(-t^2 / (2 n_sq)), clamped to 1.
// The original counterpart is min(1, 2 exp(-t^2 / (2 sum A^2))).
TailBoundReport two_sided_bound(const IntervalSet& set, double t, DeviationForm form);
TailBoundReport two_sided_bound(const MixedScales& scales, double t, DeviationForm form);

// Chernoff parameter minimizing the one-sided exponent at sum-form deviation
// t_sum for the given kind's scale.
double optimal_chernoff_s(const MixedScales& scales, double t_sum, MgfBoundKind kind);

// One-sided bound for n iid copies: exp(-0.5 (t / sigma)^2 n) in mean form,
// with sigma the upper-tail scale (Improved) or A (Original); sum form
// replaces t by t/n.  Agrees with one_sided_bound on the repeated set.
double iid_one_sided_bound(const Interval& iv, std::int64_t n, double t, DeviationForm form,
                           MgfBoundKind kind = MgfBoundKind::Improved);
double log_iid_one_sided_bound(const Interval& iv, std::int64_t n, double t, DeviationForm form,
                               MgfBoundKind kind = MgfBoundKind::Improved);

// exp(-0.5 k^2 n) for a mean-form deviation of k averaged-scale units.
double standardized_bound(double k, std::int64_t n);

// Smallest n >= 1 with iid_one_sided_bound(iv, n, t, Mean, kind) <= delta.
// Closed form ceil(2 sigma^2 ln(1/delta) / t^2) with the boundary checked by
// direct evaluation at n and n-1.
std::int64_t invert_for_n(const Interval& iv, double t, double delta, MgfBoundKind kind);

// Sum-form deviation at which the requested bound equals delta.  One-sided
// (and two-sided Original) invert in closed form; the two-sided Improved
// bound is bisected to full precision.
double invert_for_t(const IntervalSet& set, double delta, Sidedness sidedness, MgfBoundKind kind);

}  // namespace hoeffding
