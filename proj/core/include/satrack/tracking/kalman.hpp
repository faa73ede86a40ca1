#pragma once

#include <Eigen/Dense>

namespace satrack::tracking {

/// Gaussian track estimate at a discrete time step.
struct TrackState {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
    int time_step = 0;
};

/// Linear motion model x' = F x + w, w ~ N(0, Q).
struct MotionModel {
    Eigen::MatrixXd transition;    // F
    Eigen::MatrixXd process_noise; // Q

    /// Planar constant-velocity model with state (x, y, vx, vy) and
    /// white-acceleration process noise of standard deviation accel_std.
    static MotionModel constant_velocity_2d(double dt, double accel_std);
};

/// Sensor observing z = H x + v, v ~ N(0, R), plus the clutter environment
/// it operates in: Poisson-distributed false alarms, uniform over a field
/// of view of the given volume.
struct SensorModel {
    Eigen::MatrixXd meas_matrix;    // H
    Eigen::MatrixXd meas_noise_cov; // R
    double detection_prob = 1.0;    // p_D in [0, 1]
    double clutter_mean = 0.0;      // expected false alarms per scan, >= 0
    double fov_volume = 1.0;        // Vol(R) > 0

    double clutter_density() const { return clutter_mean / fov_volume; }
};

/// Kalman time update. Throws std::domain_error if the predicted covariance
/// is not positive definite.
TrackState predict(const TrackState& state, const MotionModel& model);

} // namespace satrack::tracking
