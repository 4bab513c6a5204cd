#include "hoeffding/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hoeffding/binomial_ci.hpp"
#include "hoeffding/mgf.hpp"

namespace hoeffding {

namespace {

constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

bool tail_event(double sum, std::size_t n, double t, DeviationForm form) {
    return (form == DeviationForm::Mean ? sum / static_cast<double>(n) : sum) >= t;
}

void require_matching(const IntervalSet& set, const std::vector<DiscreteDistribution>& dists) {
    if (dists.size() != set.size()) {
        throw std::invalid_argument("need exactly one distribution per interval");
    }
    for (std::size_t i = 0; i < dists.size(); ++i) {
        if (!(dists[i].host() == set[i])) {
            throw std::invalid_argument("distribution host interval does not match the set");
        }
    }
}

}  // namespace

LemmaReport verify_lemma(const Interval& iv, double s_max, std::size_t s_steps) {
    if (!std::isfinite(s_max) || s_max <= 0.0) {
        throw std::invalid_argument("s_max must be positive and finite");
    }
    if (s_steps < 1) {
        throw std::invalid_argument("s_steps must be at least 1");
    }
    LemmaReport rep{iv, {}, {}, std::numeric_limits<double>::infinity(), false};
    rep.s_grid.reserve(s_steps);
    rep.margins.reserve(s_steps);
    const double log_max = std::log(s_max);
    const double log_min = log_max + std::log(1e-4);
    for (std::size_t i = 0; i < s_steps; ++i) {
        double s = s_max;
        if (s_steps > 1) {
            const double frac =
                static_cast<double>(i) / static_cast<double>(s_steps - 1);
            s = i + 1 == s_steps ? s_max : std::exp(log_min + frac * (log_max - log_min));
        }
        const double margin =
            log_mgf_bound(iv, s, MgfBoundKind::Improved) - log_two_point_mgf(iv, s);
        rep.s_grid.push_back(s);
        rep.margins.push_back(margin);
        rep.min_margin = std::min(rep.min_margin, margin);
    }
    rep.pass = rep.min_margin >= -1e-12;
    return rep;
}

ExtremalityReport verify_extremality(const Interval& iv, double s, std::size_t trials,
                                     std::uint64_t seed) {
    if (!std::isfinite(s) || s < 0.0) {
        throw std::invalid_argument("s must be nonnegative and finite");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const double log_ref = log_two_point_mgf(iv, s);
    SplitMix64 rng(stream_seed(seed, 0));
    ExtremalityReport rep;
    rep.trials = trials;
    rep.worst_log_gap = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < trials; ++i) {
        const DiscreteDistribution dist = random_zero_mean(iv, rng);
        rep.worst_log_gap = std::max(rep.worst_log_gap, dist.log_mgf(s) - log_ref);
    }
    rep.pass = rep.worst_log_gap <= 1e-12;
    return rep;
}

TailEstimate empirical_tail(const IntervalSet& set, const std::vector<DiscreteDistribution>& dists,
                            double t, DeviationForm form, std::uint64_t reps, std::uint64_t seed,
                            unsigned workers) {
    require_matching(set, dists);
    if (reps < 1) {
        throw std::invalid_argument("reps must be at least 1");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("t must be finite");
    }
    const std::size_t n = set.size();

    const auto count_hits = [&](std::uint64_t first, std::uint64_t last) {
        std::uint64_t hits = 0;
        for (std::uint64_t r = first; r < last; ++r) {
            SplitMix64 rng(stream_seed(seed, r));
            double sum = 0.0;
            for (const DiscreteDistribution& d : dists) {
                sum += d.sample(rng);
            }
            hits += tail_event(sum, n, t, form) ? 1 : 0;
        }
        return hits;
    };

    std::uint64_t hits = 0;
    if (workers <= 1 || reps < 2 * workers) {
        hits = count_hits(0, reps);
    } else {
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = reps * w / workers;
            const std::uint64_t last = reps * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] { partial[w] = count_hits(first, last); });
        }
        for (std::thread& th : pool) th.join();
        for (std::uint64_t h : partial) hits += h;  // order-independent integer sum
    }

    TailEstimate est;
    est.hits = hits;
    est.reps = reps;
    est.seed = seed;
    est.estimate = static_cast<double>(hits) / static_cast<double>(reps);
    est.ci_upper_99 = clopper_pearson_upper(hits, reps, 0.99);
    return est;
}

double exact_tail(const IntervalSet& set, const std::vector<DiscreteDistribution>& dists, double t,
                  DeviationForm form) {
    require_matching(set, dists);
    if (!std::isfinite(t)) {
        throw std::invalid_argument("t must be finite");
    }
    std::uint64_t outcomes = 1;
    for (const DiscreteDistribution& d : dists) {
        outcomes *= d.support().size();
        if (outcomes > kEnumerationCap) {
            throw std::invalid_argument("outcome count too large to enumerate");
        }
    }
    const std::size_t n = set.size();
    std::vector<std::size_t> idx(n, 0);
    double total = 0.0;
    while (true) {
        double p = 1.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            p *= dists[i].probs()[idx[i]];
            sum += dists[i].support()[idx[i]];
        }
        if (p > 0.0 && tail_event(sum, n, t, form)) {
            total += p;
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < dists[i].support().size()) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return total;
}

bool verify_psi_second_max(const Interval& iv, std::size_t mu_grid_size, double mu_max) {
    if (mu_grid_size < 2) {
        throw std::invalid_argument("mu grid needs at least 2 points");
    }
    const double lam = iv.lambda();
    const double cap = lam > 0.5 ? lam * (1.0 - lam) : 0.25;
    double best = -1.0;
    std::size_t argmax = 0;
    for (std::size_t k = 0; k < mu_grid_size; ++k) {
        const double mu =
            mu_max * static_cast<double>(k) / static_cast<double>(mu_grid_size - 1);
        const double v = psi_second(iv, mu);
        if (v > cap + 1e-15) {
            return false;
        }
        if (v > best) {
            best = v;
            argmax = k;
        }
    }
    return lam > 0.5 ? argmax == 0 : true;
}

}  // namespace hoeffding
