#include "satrack/sim/scenario.hpp"

namespace satrack::sim {

EffectiveParams effective_params(const ScenarioConfig& cfg, int sensor, int step) {
    EffectiveParams p{cfg.meas_noise_std, cfg.clutter_mean, cfg.detection_prob};
    for (const auto& d : cfg.disturbances) {
        if (d.sensor != sensor || step < d.from || step >= d.to) continue;
        switch (d.kind) {
            case Disturbance::Kind::noise_scale: p.meas_noise_std *= d.value; break;
            case Disturbance::Kind::clutter_scale: p.clutter_mean *= d.value; break;
            case Disturbance::Kind::pd_set: p.detection_prob = d.value; break;
        }
    }
    return p;
}

GeneratedRun generate_scenario(const ScenarioConfig& cfg, std::uint64_t run_seed) {
    Rng rng(run_seed);
    GeneratedRun run;
    run.truth.reserve(static_cast<std::size_t>(cfg.num_steps));
    run.scans.reserve(static_cast<std::size_t>(cfg.num_steps));

    Eigen::Vector4d x;
    x << cfg.init_x + cfg.init_pos_std * rng.normal(),
         cfg.init_y + cfg.init_pos_std * rng.normal(),
         cfg.init_vx + cfg.init_vel_std * rng.normal(),
         cfg.init_vy + cfg.init_vel_std * rng.normal();

    const double dt = cfg.dt;
    for (int k = 0; k < cfg.num_steps; ++k) {
        // White-acceleration motion: exact sampling of the CV process noise.
        const double ax = cfg.accel_std * rng.normal();
        const double ay = cfg.accel_std * rng.normal();
        x(0) += x(2) * dt + 0.5 * ax * dt * dt;
        x(1) += x(3) * dt + 0.5 * ay * dt * dt;
        x(2) += ax * dt;
        x(3) += ay * dt;
        run.truth.push_back(x);

        std::vector<Scan> step_scans;
        step_scans.reserve(static_cast<std::size_t>(cfg.num_sensors));
        for (int s = 1; s <= cfg.num_sensors; ++s) {
            const EffectiveParams p = effective_params(cfg, s, k);
            Scan scan;
            const int clutter = rng.poisson(p.clutter_mean);
            for (int c = 0; c < clutter; ++c) {
                Eigen::VectorXd m(2);
                m << rng.uniform(cfg.fov_x_lo, cfg.fov_x_hi),
                     rng.uniform(cfg.fov_y_lo, cfg.fov_y_hi);
                scan.push_back(std::move(m));
            }
            if (rng.uniform() < p.detection_prob) {
                Eigen::VectorXd m(2);
                m << x(0) + p.meas_noise_std * rng.normal(),
                     x(1) + p.meas_noise_std * rng.normal();
                scan.push_back(std::move(m));
            }
            step_scans.push_back(std::move(scan));
        }
        run.scans.push_back(std::move(step_scans));
    }
    return run;
}

tracking::SensorModel nominal_sensor(const ScenarioConfig& cfg) {
    tracking::SensorModel s;
    s.meas_matrix = Eigen::MatrixXd::Zero(2, 4);
    s.meas_matrix(0, 0) = 1.0;
    s.meas_matrix(1, 1) = 1.0;
    s.meas_noise_cov =
        cfg.meas_noise_std * cfg.meas_noise_std * Eigen::MatrixXd::Identity(2, 2);
    s.detection_prob = cfg.detection_prob;
    s.clutter_mean = cfg.clutter_mean;
    s.fov_volume = cfg.fov_volume();
    return s;
}

tracking::TrackState initial_state(const ScenarioConfig& cfg) {
    tracking::TrackState st;
    st.mean = Eigen::VectorXd(4);
    st.mean << cfg.init_x, cfg.init_y, cfg.init_vx, cfg.init_vy;
    Eigen::VectorXd diag(4);
    const double p2 = cfg.init_pos_std * cfg.init_pos_std;
    const double v2 = cfg.init_vel_std * cfg.init_vel_std;
    diag << p2, p2, v2, v2;
    st.cov = diag.asDiagonal();
    st.time_step = 0;
    return st;
}

} // namespace satrack::sim
