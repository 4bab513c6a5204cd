#pragma once

#include <span>
#include <vector>

#include "hoeffding/interval.hpp"
#include "hoeffding/rng.hpp"

namespace hoeffding {

// Finite-support mean-zero distribution living on a host interval.  The
// oracle object for MGF checks: any such distribution's MGF is dominated by
// the extremal two-point law on the same interval.
class DiscreteDistribution {
  public:
    // Validates: matching non-empty lists, support inside [a, b], weights
    // nonnegative summing to 1 (1e-12 absolute), mean zero within
    // 1e-12 * (b - a).
    DiscreteDistribution(Interval host, std::vector<double> support, std::vector<double> probs);

    const Interval& host() const noexcept { return host_; }
    std::span<const double> support() const noexcept { return support_; }
    std::span<const double> probs() const noexcept { return probs_; }

    // sum_i p_i exp(s x_i); at least 1 for any mean-zero law, exactly 1 at
    // s = 0.  Throws std::overflow_error instead of returning infinity.
    double mgf(double s) const;
    double log_mgf(double s) const;

    // Inverse-CDF draw using one uniform from the generator.
    double sample(SplitMix64& rng) const;

  private:
    Interval host_;
    std::vector<double> support_;
    std::vector<double> probs_;
    std::vector<double> cdf_;
};

// The mean-zero law on {a, b}: p(a) = b/(b-a), p(b) = -a/(b-a).  Maximizes
// the MGF among all mean-zero laws on the interval.
DiscreteDistribution extremal_two_point(const Interval& iv);

// Support {a, 0, b} with the extremal weights scaled by c in [0, 1] and the
// rest at zero; mean-zero for every c, extremal again at c = 1.
DiscreteDistribution zero_mean_mixture(const Interval& iv, double c);

// Random member of a mean-zero test family: a weighted mixture of one to
// four random two-point blocks {x1 < 0 < x2} in [a, b] (each exactly
// mean-zero by construction) plus an optional atom at zero.
DiscreteDistribution random_zero_mean(const Interval& iv, SplitMix64& rng);

}  // namespace hoeffding
