#pragma once

#include "satrack/tracking/kalman.hpp"

namespace satrack::tracking {

/// Mixture coefficients of the nominal association-outcome density: c0 scales
/// the missed-detection component, c1 the detection component whose gated
/// statistic follows a chi-squared law with meas-dim degrees of freedom.
/// Both carry the clutter spatial density (clutter_mean / fov_volume), so
/// their magnitudes depend on the field-of-view volume; only their ratio is
/// used downstream (see miss_mixture_weight for the volume-free form).
struct ReferenceCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
};

/// Closed-form nominal coefficients
///   c0 = (1 - p_D) e^{-lam} lam_c^{lam + p_D}            / (lam + p_D)!
///   c1 = p_D       e^{-lam} lam_c^{lam + p_D - 1} (lam + p_D) / (lam + p_D)!
/// with lam = clutter_mean, lam_c = clutter density, and x! the generalized
/// factorial. clutter_mean == 0 is allowed only with detection_prob == 1,
/// giving exactly (0, 1); otherwise throws std::domain_error.
ReferenceCoeffs reference_coeffs(const SensorModel& sensor);

/// Probability weight of the missed-detection event in the nominal outcome
/// distribution: the c0 : c1 ratio evaluated on the count scale,
///   rho0 = (1 - p_D) lam / ((1 - p_D) lam + p_D (lam + p_D)).
/// Independent of the field-of-view volume. detection_prob == 1 gives 0,
/// detection_prob == 0 gives 1 (as does clutter_mean == 0 with p_D == 0).
double miss_mixture_weight(double detection_prob, double clutter_mean);

} // namespace satrack::tracking
