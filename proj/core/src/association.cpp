#include "satrack/tracking/association.hpp"

#include <limits>
#include <stdexcept>

#include "satrack/stats.hpp"

namespace satrack::tracking {

Association associate_nn(const TrackState& state,
                         const std::vector<Eigen::VectorXd>& scan,
                         const SensorModel& sensor, double gate_prob) {
    if (!(gate_prob > 0.0 && gate_prob < 1.0))
        throw std::invalid_argument("associate_nn: gate_prob must lie in (0, 1)");

    Association out;
    out.predicted_meas = sensor.meas_matrix * state.mean;
    Eigen::MatrixXd s =
        sensor.meas_matrix * state.cov * sensor.meas_matrix.transpose() + sensor.meas_noise_cov;
    out.innovation_cov = 0.5 * (s + s.transpose());

    Eigen::LLT<Eigen::MatrixXd> llt(out.innovation_cov);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("associate_nn: innovation covariance is singular");

    const auto dof = static_cast<double>(out.predicted_meas.size());
    // The gate quantile only depends on (gate_prob, dof), which are fixed
    // across a run; memoize the last pair per thread.
    thread_local double cached_p = -1.0, cached_dof = -1.0, cached_q = 0.0;
    if (gate_prob != cached_p || dof != cached_dof) {
        cached_q = stats::chi2_quantile(gate_prob, dof);
        cached_p = gate_prob;
        cached_dof = dof;
    }
    out.gate_threshold = cached_q;

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const Eigen::VectorXd gamma = scan[i] - out.predicted_meas;
        const double d2 = gamma.dot(llt.solve(gamma));
        // Strict < keeps the lowest index on ties.
        if (d2 <= out.gate_threshold && d2 < best) {
            best = d2;
            out.assoc_index = static_cast<int>(i) + 1;
            out.innovation = gamma;
            out.statistic = d2;
        }
    }
    return out;
}

std::optional<double> gated_statistic(const Association& assoc) {
    if (assoc.assoc_index == 0) return std::nullopt;
    return assoc.statistic;
}

TrackState update(const TrackState& state, const Association& assoc,
                  const SensorModel& sensor) {
    if (assoc.assoc_index == 0) return state;

    Eigen::LLT<Eigen::MatrixXd> llt(assoc.innovation_cov);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("update: innovation covariance is singular");

    const Eigen::MatrixXd k =
        llt.solve(sensor.meas_matrix * state.cov.transpose()).transpose();
    TrackState out;
    out.mean = state.mean + k * assoc.innovation;
    Eigen::MatrixXd p =
        (Eigen::MatrixXd::Identity(state.cov.rows(), state.cov.cols()) -
         k * sensor.meas_matrix) * state.cov;
    out.cov = 0.5 * (p + p.transpose());
    out.time_step = state.time_step;
    return out;
}

} // namespace satrack::tracking
