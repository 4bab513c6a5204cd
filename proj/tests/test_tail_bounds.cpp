#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hoeffding/tail_bounds.hpp"
#include "test_support.hpp"

using namespace hoeffding;

namespace {

// Reference values computed with 60-digit arithmetic.
constexpr double kOneSidedImproved = 0.16767724875179709;  // exp(-25/14)
constexpr double kOneSidedOriginal = 0.17832671545615314;  // exp(-25/14.5)
constexpr double kTwoSided = 0.30301253198840978;          // exp(-25/14) + exp(-25/12.5)
constexpr double kInvertT = 6.4761293864279668;            // sqrt(14 ln 20)

IntervalSet worked_set() {
    return IntervalSet({{-2, 1}, {-1, 3}, {-1, 1}});
}

}  // namespace

TEST_CASE("interval set rejects empty input") {
    CHECK_THROWS_AS(IntervalSet(std::vector<Interval>{}), std::invalid_argument);
}

TEST_CASE("index sets partition by skew") {
    const auto [right, left] = index_sets(worked_set());
    CHECK_EQ(right, std::vector<std::size_t>{1, 2});
    CHECK_EQ(left, std::vector<std::size_t>{0});

    const auto [r1, l1] = index_sets(IntervalSet({{-1, 1}}));
    CHECK_EQ(r1, std::vector<std::size_t>{0});
    CHECK(l1.empty());

    const auto [r2, l2] = index_sets(IntervalSet({{-3, 1}, {-2, 1}}));
    CHECK(r2.empty());
    CHECK_EQ(l2, (std::vector<std::size_t>{0, 1}));
}

TEST_CASE("mixed scales of the worked set are exact") {
    const MixedScales ms = mixed_scales(worked_set());
    CHECK_EQ(ms.m_sq, 7.0);
    CHECK_EQ(ms.n_sq, 6.25);
    CHECK_EQ(ms.sum_a_sq, 7.25);
    CHECK_EQ(ms.sum_g_sq, 6.0);
    CHECK_EQ(ms.n, 3);

    const MixedScales sym = mixed_scales(IntervalSet({{-1, 1}, {-1, 1}, {-1, 1}}));
    CHECK_EQ(sym.m_sq, 3.0);
    CHECK_EQ(sym.n_sq, 3.0);

    const MixedScales single = mixed_scales(IntervalSet({{-2, 1}}));
    CHECK_EQ(single.m_sq, 2.0);
    CHECK_EQ(single.n_sq, 2.25);
}

TEST_CASE("one-sided bound reference values") {
    const auto r = one_sided_bound(worked_set(), 5.0, DeviationForm::Sum, MgfBoundKind::Improved);
    CHECK_EQ(r.bound_improved, doctest::Approx(kOneSidedImproved).epsilon(1e-12));
    CHECK_EQ(r.bound_original, doctest::Approx(kOneSidedOriginal).epsilon(1e-12));
    CHECK_EQ(r.optimal_s, doctest::Approx(5.0 / 7.0).epsilon(1e-15));
    CHECK_LE(r.bound_improved, r.bound_original);

    const auto tiny = one_sided_bound(IntervalSet({{-1, 1}}), 1e-300, DeviationForm::Sum,
                                      MgfBoundKind::Improved);
    CHECK_EQ(tiny.bound_improved, 1.0);

    CHECK_THROWS_WITH_AS(
        one_sided_bound(worked_set(), 0.0, DeviationForm::Sum, MgfBoundKind::Improved),
        doctest::Contains("positive"), std::invalid_argument);
    CHECK_THROWS_AS(one_sided_bound(worked_set(), -2.0, DeviationForm::Sum, MgfBoundKind::Improved),
                    std::invalid_argument);
}

TEST_CASE("two-sided bound reference values") {
    const auto r = two_sided_bound(worked_set(), 5.0, DeviationForm::Sum);
    CHECK_EQ(r.bound_improved, doctest::Approx(kTwoSided).epsilon(1e-12));
    CHECK_LE(r.bound_improved, r.bound_original);
    CHECK_THROWS_AS(two_sided_bound(worked_set(), 0.0, DeviationForm::Sum),
                    std::invalid_argument);

    // symmetric intervals: exactly twice the one-sided improved bound
    const IntervalSet sym({{-1, 1}, {-1, 1}});
    for (double t : {0.5, 1.0, 1.9}) {
        const auto two = two_sided_bound(sym, t, DeviationForm::Sum);
        const auto one = one_sided_bound(sym, t, DeviationForm::Sum, MgfBoundKind::Improved);
        CHECK_EQ(two.bound_improved, 2.0 * one.bound_improved);
        CHECK_EQ(two.bound_improved, two.bound_original);
    }

    // small deviations: the union bound saturates at 1
    const auto clamped = two_sided_bound(sym, 1e-6, DeviationForm::Sum);
    CHECK_EQ(clamped.bound_improved, 1.0);
    CHECK_EQ(clamped.log_bound_improved, 0.0);
}

TEST_CASE("iid one-sided bound") {
    const Interval iv(-2, 1);
    CHECK_EQ(iid_one_sided_bound(iv, 100, 0.2, DeviationForm::Mean),
             doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
    CHECK_EQ(iid_one_sided_bound(iv, 100, 0.2, DeviationForm::Mean, MgfBoundKind::Original),
             doctest::Approx(0.41111229050718744).epsilon(1e-13));
    CHECK_EQ(iid_one_sided_bound(Interval(-1, 1), 1, 1.0, DeviationForm::Mean),
             doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(iid_one_sided_bound(iv, 0, 0.2, DeviationForm::Mean), std::invalid_argument);
    CHECK_THROWS_AS(iid_one_sided_bound(iv, 10, 0.0, DeviationForm::Mean), std::invalid_argument);

    // agrees with the general machinery on a repeated set
    SplitMix64 g(41);
    for (int i = 0; i < 50; ++i) {
        const Interval r = testing::random_interval(g);
        const std::int64_t n = 1 + static_cast<std::int64_t>(g.next() % 12);
        const double t = 0.2 + g.next_double();
        const IntervalSet rep(std::vector<Interval>(static_cast<std::size_t>(n), r));
        for (DeviationForm form : {DeviationForm::Sum, DeviationForm::Mean}) {
            const auto general = one_sided_bound(rep, t, form, MgfBoundKind::Improved);
            CHECK_EQ(iid_one_sided_bound(r, n, t, form),
                     doctest::Approx(general.bound_improved).epsilon(1e-12));
        }
    }
}

TEST_CASE("standardized bound") {
    CHECK_EQ(standardized_bound(1.0, 1), std::exp(-0.5));
    CHECK_EQ(standardized_bound(1.0, 4), std::exp(-2.0));
    CHECK_EQ(standardized_bound(1e-12, 3), doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(standardized_bound(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(standardized_bound(1.0, 0), std::invalid_argument);
}

TEST_CASE("invert_for_n reference values and minimality") {
    const Interval iv(-2, 1);
    CHECK_EQ(invert_for_n(iv, 0.2, 0.05, MgfBoundKind::Improved), 300);
    CHECK_EQ(invert_for_n(iv, 0.2, 0.05, MgfBoundKind::Original), 338);
    CHECK_EQ(invert_for_n(iv, 50.0, 0.9999, MgfBoundKind::Improved), 1);
    CHECK_THROWS_AS(invert_for_n(iv, 0.2, 1.5, MgfBoundKind::Improved), std::invalid_argument);
    CHECK_THROWS_AS(invert_for_n(iv, 0.2, 0.0, MgfBoundKind::Improved), std::invalid_argument);
    CHECK_THROWS_AS(invert_for_n(iv, -0.2, 0.1, MgfBoundKind::Improved), std::invalid_argument);

    SplitMix64 g(43);
    for (int i = 0; i < 100; ++i) {
        const Interval r = testing::random_interval(g);
        const double t = 0.05 + 0.5 * g.next_double();
        const double delta = 1e-6 + 0.9 * g.next_double();
        for (MgfBoundKind kind : {MgfBoundKind::Improved, MgfBoundKind::Original}) {
            const std::int64_t n = invert_for_n(r, t, delta, kind);
            CHECK_LE(log_iid_one_sided_bound(r, n, t, DeviationForm::Mean, kind),
                     std::log(delta));
            if (n > 1) {
                CHECK_GT(log_iid_one_sided_bound(r, n - 1, t, DeviationForm::Mean, kind),
                         std::log(delta));
            }
        }
    }
}

TEST_CASE("invert_for_t reference values and round trips") {
    const IntervalSet set = worked_set();
    CHECK_EQ(invert_for_t(set, 0.05, Sidedness::One, MgfBoundKind::Improved),
             doctest::Approx(kInvertT).epsilon(1e-12));
    CHECK_EQ(invert_for_t(IntervalSet({{-1, 1}}), std::exp(-0.5), Sidedness::One,
                          MgfBoundKind::Improved),
             doctest::Approx(1.0).epsilon(1e-12));
    CHECK_EQ(invert_for_t(set, kTwoSided, Sidedness::Two, MgfBoundKind::Improved),
             doctest::Approx(5.0).epsilon(1e-9));
    CHECK_THROWS_AS(invert_for_t(set, 1.5, Sidedness::One, MgfBoundKind::Improved),
                    std::invalid_argument);

    SplitMix64 g(47);
    for (int i = 0; i < 100; ++i) {
        const IntervalSet rs = testing::random_set(g, 1, 20);
        const double delta = 1e-6 + (0.99 - 1e-6) * g.next_double();
        for (MgfBoundKind kind : {MgfBoundKind::Improved, MgfBoundKind::Original}) {
            const double t1 = invert_for_t(rs, delta, Sidedness::One, kind);
            const auto one = one_sided_bound(rs, t1, DeviationForm::Sum, kind);
            CHECK_EQ(one.bound(kind), doctest::Approx(delta).epsilon(1e-9));

            const double t2 = invert_for_t(rs, delta, Sidedness::Two, kind);
            const auto two = two_sided_bound(rs, t2, DeviationForm::Sum);
            CHECK_EQ(two.bound(kind), doctest::Approx(delta).epsilon(1e-9));
        }
    }
}

TEST_CASE("scale ordering on random sets") {
    SplitMix64 g(53);
    for (int i = 0; i < 1000; ++i) {
        const IntervalSet set = testing::random_set(g, 1, 50);
        const MixedScales ms = mixed_scales(set);
        const double g_bar = std::sqrt(ms.g_bar_sq());
        const double m_bar = std::sqrt(ms.m_bar_sq());
        const double n_bar = std::sqrt(ms.n_bar_sq());
        const double a_bar = std::sqrt(ms.a_bar_sq());
        const double slack = 1.0 + 1e-12;
        CHECK_LE(g_bar, m_bar * slack);
        CHECK_LE(m_bar, a_bar * slack);
        CHECK_LE(g_bar, n_bar * slack);
        CHECK_LE(n_bar, a_bar * slack);
    }
}

TEST_CASE("improved never exceeds original") {
    SplitMix64 g(59);
    for (int i = 0; i < 300; ++i) {
        const IntervalSet set = testing::random_set(g, 1, 12);
        const auto [right, left] = index_sets(set);
        const double t = (0.1 + 3.0 * g.next_double()) * std::sqrt(mixed_scales(set).sum_a_sq);
        const auto one = one_sided_bound(set, t, DeviationForm::Sum, MgfBoundKind::Improved);
        CHECK_LE(one.log_bound_improved, one.log_bound_original);
        bool strict = false;
        for (std::size_t j : left) {
            strict = strict || set[j].geometric_mean() < set[j].arithmetic_mean();
        }
        if (strict) {
            CHECK_LT(one.log_bound_improved, one.log_bound_original);
        }
        const auto two = two_sided_bound(set, t, DeviationForm::Sum);
        CHECK_LE(two.bound_improved, two.bound_original);
    }
}

TEST_CASE("mean form equals sum form at n*t") {
    SplitMix64 g(61);
    for (int i = 0; i < 200; ++i) {
        const IntervalSet set = testing::random_set(g, 1, 30);
        const double t = 0.01 + 2.0 * g.next_double();
        const double t_sum = static_cast<double>(set.size()) * t;
        const auto mean_form = one_sided_bound(set, t, DeviationForm::Mean, MgfBoundKind::Improved);
        const auto sum_form =
            one_sided_bound(set, t_sum, DeviationForm::Sum, MgfBoundKind::Improved);
        CHECK_EQ(mean_form.bound_improved, sum_form.bound_improved);
        CHECK_EQ(mean_form.bound_original, sum_form.bound_original);
        const auto mean_two = two_sided_bound(set, t, DeviationForm::Mean);
        const auto sum_two = two_sided_bound(set, t_sum, DeviationForm::Sum);
        CHECK_EQ(mean_two.bound_improved, sum_two.bound_improved);
    }
}

TEST_CASE("permutation invariance and additivity of mixed scales") {
    SplitMix64 g(67);
    std::mt19937 shuffler(12345);
    for (int i = 0; i < 200; ++i) {
        std::vector<Interval> items;
        const std::size_t n = 2 + g.next() % 20;
        for (std::size_t k = 0; k < n; ++k) items.push_back(testing::random_interval(g));
        const MixedScales base = mixed_scales(IntervalSet(items));

        std::vector<Interval> shuffled = items;
        std::shuffle(shuffled.begin(), shuffled.end(), shuffler);
        const MixedScales perm = mixed_scales(IntervalSet(shuffled));
        CHECK_EQ(perm.m_sq, doctest::Approx(base.m_sq).epsilon(1e-12));
        CHECK_EQ(perm.n_sq, doctest::Approx(base.n_sq).epsilon(1e-12));
        CHECK_EQ(perm.sum_a_sq, doctest::Approx(base.sum_a_sq).epsilon(1e-12));
        CHECK_EQ(perm.sum_g_sq, doctest::Approx(base.sum_g_sq).epsilon(1e-12));

        const std::size_t cut = 1 + g.next() % (n - 1);
        const MixedScales head =
            mixed_scales(IntervalSet({items.begin(), items.begin() + cut}));
        const MixedScales tail = mixed_scales(IntervalSet({items.begin() + cut, items.end()}));
        CHECK_EQ(head.m_sq + tail.m_sq, doctest::Approx(base.m_sq).epsilon(1e-12));
        CHECK_EQ(head.n_sq + tail.n_sq, doctest::Approx(base.n_sq).epsilon(1e-12));
        CHECK_EQ(head.sum_a_sq + tail.sum_a_sq, doctest::Approx(base.sum_a_sq).epsilon(1e-12));
        CHECK_EQ(head.sum_g_sq + tail.sum_g_sq, doctest::Approx(base.sum_g_sq).epsilon(1e-12));
        CHECK_EQ(head.n + tail.n, base.n);
    }
}

TEST_CASE("optimal_s minimizes the Chernoff exponent") {
    SplitMix64 g(71);
    for (int i = 0; i < 50; ++i) {
        const IntervalSet set = testing::random_set(g, 1, 10);
        const double t = (0.2 + 2.0 * g.next_double()) * std::sqrt(mixed_scales(set).m_sq);
        const auto r = one_sided_bound(set, t, DeviationForm::Sum, MgfBoundKind::Improved);
        CHECK_GT(r.optimal_s, 0.0);
        const double scale_sq = r.scales.m_sq;
        const auto exponent = [&](double s) { return -s * t + 0.5 * s * s * scale_sq; };
        const double at_opt = exponent(r.optimal_s);
        CHECK_EQ(at_opt, doctest::Approx(r.log_bound_improved).epsilon(1e-12));
        for (int k = 1; k <= 1000; ++k) {
            const double s = r.optimal_s * 2.0 * static_cast<double>(k) / 1000.0;
            CHECK_GE(exponent(s), at_opt - 1e-12);
        }
    }
}

TEST_CASE("iid_scales matches the repeated set") {
    SplitMix64 g(73);
    for (int i = 0; i < 100; ++i) {
        const Interval iv = testing::random_interval(g);
        const std::int64_t n = 1 + static_cast<std::int64_t>(g.next() % 40);
        const MixedScales direct = iid_scales(iv, n);
        const MixedScales repeated =
            mixed_scales(IntervalSet(std::vector<Interval>(static_cast<std::size_t>(n), iv)));
        CHECK_EQ(direct.m_sq, doctest::Approx(repeated.m_sq).epsilon(1e-12));
        CHECK_EQ(direct.n_sq, doctest::Approx(repeated.n_sq).epsilon(1e-12));
        CHECK_EQ(direct.sum_a_sq, doctest::Approx(repeated.sum_a_sq).epsilon(1e-12));
        CHECK_EQ(direct.sum_g_sq, doctest::Approx(repeated.sum_g_sq).epsilon(1e-12));
    }
}
