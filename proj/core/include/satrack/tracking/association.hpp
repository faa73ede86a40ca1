#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "satrack/tracking/kalman.hpp"

namespace satrack::tracking {

/// Outcome of gating + nearest-neighbor association for one scan.
/// assoc_index uses the convention 0 = missed detection (nothing associated),
/// i >= 1 = scan measurement i-1 was associated.
struct Association {
    Eigen::VectorXd predicted_meas; // z_hat = H x
    Eigen::MatrixXd innovation_cov; // S = H P H^T + R
    double gate_threshold = 0.0;    // chi-squared gate on the statistic below
    int assoc_index = 0;
    Eigen::VectorXd innovation;     // z - z_hat of the associated measurement
    double statistic = 0.0;         // innovation^T S^-1 innovation; 0 on miss
};

/// Gates the scan against the chi-squared ellipsoid of coverage gate_prob
/// and associates the candidate with the smallest squared Mahalanobis
/// distance (ties broken toward the lowest scan index). An empty gate is a
/// missed detection. Throws std::domain_error if the innovation covariance
/// is singular.
Association associate_nn(const TrackState& state,
                         const std::vector<Eigen::VectorXd>& scan,
                         const SensorModel& sensor, double gate_prob);

/// The gated squared-Mahalanobis statistic of the associated measurement,
/// or nullopt on a missed detection.
std::optional<double> gated_statistic(const Association& assoc);

/// Kalman measurement update with the associated measurement; returns the
/// state unchanged (a pure copy) on a missed detection. The posterior
/// covariance is symmetrized. Throws std::domain_error if the innovation
/// covariance is singular.
TrackState update(const TrackState& state, const Association& assoc,
                  const SensorModel& sensor);

} // namespace satrack::tracking
