#include "satrack/tracking/kalman.hpp"

#include <stdexcept>

namespace satrack::tracking {

MotionModel MotionModel::constant_velocity_2d(double dt, double accel_std) {
    if (!(dt > 0.0)) throw std::invalid_argument("constant_velocity_2d: dt must be > 0");
    if (accel_std < 0.0)
        throw std::invalid_argument("constant_velocity_2d: accel_std must be >= 0");

    MotionModel m;
    m.transition = Eigen::MatrixXd::Identity(4, 4);
    m.transition(0, 2) = dt;
    m.transition(1, 3) = dt;

    // White-acceleration noise: per axis [[dt^4/4, dt^3/2], [dt^3/2, dt^2]] * sigma^2.
    const double q = accel_std * accel_std;
    const double d2 = dt * dt, d3 = d2 * dt, d4 = d3 * dt;
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(4, 4);
    Q(0, 0) = Q(1, 1) = 0.25 * d4 * q;
    Q(2, 2) = Q(3, 3) = d2 * q;
    Q(0, 2) = Q(2, 0) = Q(1, 3) = Q(3, 1) = 0.5 * d3 * q;
    m.process_noise = Q;
    return m;
}

TrackState predict(const TrackState& state, const MotionModel& model) {
    TrackState out;
    out.mean = model.transition * state.mean;
    Eigen::MatrixXd p =
        model.transition * state.cov * model.transition.transpose() + model.process_noise;
    out.cov = 0.5 * (p + p.transpose());
    out.time_step = state.time_step + 1;

    Eigen::LLT<Eigen::MatrixXd> llt(out.cov);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("predict: covariance lost positive definiteness");
    return out;
}

} // namespace satrack::tracking
