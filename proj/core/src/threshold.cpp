#include "satrack/sl/threshold.hpp"

#include <cmath>
#include <stdexcept>

#include "satrack/stats.hpp"

namespace satrack::sl {

double dc_threshold(const ThresholdParams& params) {
    if (!(params.alpha > 0.0 && params.alpha < 1.0))
        throw std::invalid_argument("dc_threshold: alpha must lie in (0, 1)");
    if (params.cardinality < 2)
        throw std::invalid_argument("dc_threshold: cardinality must be >= 2");
    if (!(params.sample_size > 0.0))
        throw std::invalid_argument("dc_threshold: sample size must be > 0");

    const double w = static_cast<double>(params.cardinality);
    const double ns = params.sample_size;
    const double z = stats::inverse_normal_cdf(1.0 - (1.0 - params.alpha) / (2.0 * w));
    const double d = z * std::sqrt((w - 1.0) / (w * w * ns));
    return 0.5 * w * d * (1.0 - w / (w + ns));
}

} // namespace satrack::sl
