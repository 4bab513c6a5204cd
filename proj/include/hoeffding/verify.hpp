#pragma once

#include <cstdint>
#include <vector>

#include "hoeffding/distribution.hpp"
#include "hoeffding/interval.hpp"
#include "hoeffding/tail_bounds.hpp"

namespace hoeffding {

// Log-space margins ln(bound) - ln(two-point MGF) across an s-grid; the
// two-point law maximizes the MGF, so a pass certifies the per-variable
// bound for every mean-zero distribution on the interval at those s.
struct LemmaReport {
    Interval interval;
    std::vector<double> s_grid;
    std::vector<double> margins;
    double min_margin = 0.0;
    bool pass = false;
};

// Margins of the Improved bound on a log-spaced grid spanning four decades
// up to s_max.  Pass iff every margin >= -1e-12.
LemmaReport verify_lemma(const Interval& iv, double s_max, std::size_t s_steps);

struct ExtremalityReport {
    bool pass = false;
    double worst_log_gap = 0.0;  // max over trials of ln mgf(dist) - ln mgf(two-point)
    std::size_t trials = 0;
};

// Draws random mean-zero distributions on the interval and checks their MGFs
// against the extremal two-point law at the given s (s = 0 passes trivially).
ExtremalityReport verify_extremality(const Interval& iv, double s, std::size_t trials,
                                     std::uint64_t seed);

struct TailEstimate {
    double estimate = 0.0;
    double ci_upper_99 = 1.0;  // one-sided Clopper-Pearson upper limit
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
};

// Monte Carlo estimate of P(S_n >= t) (sum form) or P(S_n/n >= t) (mean
// form).  Replication r draws from a generator seeded with
// stream_seed(seed, r), so the result is identical for any worker count.
TailEstimate empirical_tail(const IntervalSet& set, const std::vector<DiscreteDistribution>& dists,
                            double t, DeviationForm form, std::uint64_t reps, std::uint64_t seed,
                            unsigned workers = 1);

// Exact tail probability by enumeration over all outcome combinations.
// Throws if the outcome count exceeds 2^24.
double exact_tail(const IntervalSet& set, const std::vector<DiscreteDistribution>& dists, double t,
                  DeviationForm form);

// Checks psi'' <= lambda (1 - lambda) with the maximum at mu = 0 on
// left-skewed intervals, and psi'' <= 1/4 on right-skewed ones, over a
// uniform mu-grid on [0, mu_max].
bool verify_psi_second_max(const Interval& iv, std::size_t mu_grid_size, double mu_max = 50.0);

}  // namespace hoeffding
