#include "satrack/tracking/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace satrack::tracking {

namespace {

void check_params(double pd, double lam) {
    if (!(pd >= 0.0 && pd <= 1.0))
        throw std::domain_error("reference model: detection_prob must lie in [0, 1]");
    if (lam < 0.0)
        throw std::domain_error("reference model: clutter_mean must be >= 0");
    if (lam == 0.0 && pd < 1.0)
        throw std::domain_error(
            "reference model: clutter_mean == 0 requires detection_prob == 1");
}

} // namespace

ReferenceCoeffs reference_coeffs(const SensorModel& sensor) {
    const double pd = sensor.detection_prob;
    const double lam = sensor.clutter_mean;
    check_params(pd, lam);
    if (!(sensor.fov_volume > 0.0))
        throw std::domain_error("reference_coeffs: fov_volume must be > 0");

    if (lam == 0.0) return {0.0, 1.0}; // pd == 1 here; lam_c^0 * 1/0! == 1

    const double lam_c = sensor.clutter_density();
    // Evaluated in log space: lam_c^(lam+pd) underflows quickly otherwise.
    const double log_common = -lam - std::lgamma(lam + pd + 1.0);
    ReferenceCoeffs out;
    out.c0 = (pd < 1.0) ? (1.0 - pd) * std::exp(log_common + (lam + pd) * std::log(lam_c))
                        : 0.0;
    out.c1 = pd * std::exp(log_common + (lam + pd - 1.0) * std::log(lam_c) +
                           std::log(lam + pd));
    return out;
}

double miss_mixture_weight(double detection_prob, double clutter_mean) {
    if (detection_prob == 0.0) {
        if (!(clutter_mean >= 0.0))
            throw std::domain_error("miss_mixture_weight: clutter_mean must be >= 0");
        return 1.0;
    }
    check_params(detection_prob, clutter_mean);
    if (detection_prob == 1.0) return 0.0;
    const double miss = (1.0 - detection_prob) * clutter_mean;
    const double hit = detection_prob * (clutter_mean + detection_prob);
    return miss / (miss + hit);
}

} // namespace satrack::tracking
