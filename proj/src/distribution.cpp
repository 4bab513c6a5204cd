#include "hoeffding/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hoeffding {

namespace {

constexpr double kMaxExpArg = 709.0;

}  // namespace

DiscreteDistribution::DiscreteDistribution(Interval host, std::vector<double> support,
                                           std::vector<double> probs)
    : host_(host), support_(std::move(support)), probs_(std::move(probs)) {
    if (support_.empty() || support_.size() != probs_.size()) {
        throw std::invalid_argument("support and weights must be non-empty and equally long");
    }
    double total = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        const double x = support_[i];
        const double p = probs_[i];
        if (!std::isfinite(x) || x < host_.a() || x > host_.b()) {
            throw std::invalid_argument("support point outside the host interval");
        }
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("weights must be finite and nonnegative");
        }
        total += p;
        mean += p * x;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("weights must sum to 1");
    }
    if (std::abs(mean) > 1e-12 * host_.width()) {
        throw std::invalid_argument("distribution must have zero mean");
    }
    cdf_.resize(probs_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        acc += probs_[i];
        cdf_[i] = acc;
    }
}

double DiscreteDistribution::mgf(double s) const {
    if (!std::isfinite(s)) {
        throw std::invalid_argument("s must be finite");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        const double e = s * support_[i];
        if (e > kMaxExpArg) {
            throw std::overflow_error("mgf overflows; use log_mgf");
        }
        sum += probs_[i] * std::exp(e);
    }
    return sum;
}

double DiscreteDistribution::log_mgf(double s) const {
    if (!std::isfinite(s)) {
        throw std::invalid_argument("s must be finite");
    }
    // log-sum-exp over ln(p_i) + s x_i, skipping zero weights
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (probs_[i] > 0.0) {
            hi = std::max(hi, std::log(probs_[i]) + s * support_[i]);
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (probs_[i] > 0.0) {
            sum += std::exp(std::log(probs_[i]) + s * support_[i] - hi);
        }
    }
    return hi + std::log(sum);
}

double DiscreteDistribution::sample(SplitMix64& rng) const {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()),
                                           support_.size() - 1);
    return support_[idx];
}

DiscreteDistribution extremal_two_point(const Interval& iv) {
    const double p_a = iv.b() / iv.width();
    const double p_b = iv.lambda();
    return DiscreteDistribution(iv, {iv.a(), iv.b()}, {p_a, p_b});
}

DiscreteDistribution zero_mean_mixture(const Interval& iv, double c) {
    if (!(c >= 0.0) || !(c <= 1.0)) {
        throw std::invalid_argument("mixture coefficient must lie in [0, 1]");
    }
    const double p_a = c * (iv.b() / iv.width());
    const double p_b = c * iv.lambda();
    return DiscreteDistribution(iv, {iv.a(), 0.0, iv.b()}, {p_a, 1.0 - c, p_b});
}

DiscreteDistribution random_zero_mean(const Interval& iv, SplitMix64& rng) {
    const int blocks = 1 + static_cast<int>(rng.next() % 4);
    const bool with_atom = (rng.next() & 1) != 0;
    std::vector<double> weights(static_cast<std::size_t>(blocks) + (with_atom ? 1 : 0));
    double total = 0.0;
    for (double& w : weights) {
        w = rng.next_double() + 1e-3;
        total += w;
    }
    for (double& w : weights) w /= total;

    std::vector<double> support;
    std::vector<double> probs;
    for (int k = 0; k < blocks; ++k) {
        // endpoints kept away from zero so each block has genuine spread
        const double x1 = iv.a() * (0.02 + 0.98 * rng.next_double());
        const double x2 = iv.b() * (0.02 + 0.98 * rng.next_double());
        const double width = x2 - x1;
        support.push_back(x1);
        probs.push_back(weights[static_cast<std::size_t>(k)] * (x2 / width));
        support.push_back(x2);
        probs.push_back(weights[static_cast<std::size_t>(k)] * (-x1 / width));
    }
    if (with_atom) {
        support.push_back(0.0);
        probs.push_back(weights.back());
    }
    return DiscreteDistribution(iv, std::move(support), std::move(probs));
}

}  // namespace hoeffding
