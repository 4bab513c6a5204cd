#include "hoeffding/binomial_ci.hpp"

#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace hoeffding {

double clopper_pearson_upper(std::uint64_t hits, std::uint64_t trials, double confidence) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    if (hits > trials) {
        throw std::invalid_argument("hits cannot exceed trials");
    }
    if (!(confidence > 0.0) || !(confidence < 1.0)) {
        throw std::invalid_argument("confidence must lie in (0, 1)");
    }
    if (hits == trials) {
        return 1.0;
    }
    return boost::math::ibeta_inv(static_cast<double>(hits) + 1.0,
                                  static_cast<double>(trials - hits), confidence);
}

}  // namespace hoeffding
