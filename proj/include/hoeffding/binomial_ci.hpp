#pragma once

#include <cstdint>

namespace hoeffding {

// One-sided Clopper-Pearson upper confidence limit for a binomial proportion:
// the smallest p with P(Bin(trials, p) <= hits) <= 1 - confidence, i.e. the
// `confidence` quantile of Beta(hits + 1, trials - hits).  Exact and
// conservative; equals 1 when hits == trials.
double clopper_pearson_upper(std::uint64_t hits, std::uint64_t trials, double confidence = 0.99);

}  // namespace hoeffding
