#pragma once

#include <vector>

#include <Eigen/Dense>

#include "satrack/sim/config.hpp"
#include "satrack/sim/rng.hpp"
#include "satrack/tracking/kalman.hpp"

namespace satrack::sim {

/// The nominal parameters of one sensor after applying the disturbances
/// active at a given step.
struct EffectiveParams {
    double meas_noise_std = 0.0;
    double clutter_mean = 0.0;
    double detection_prob = 0.0;
};

/// Disturbance schedule lookup for a 1-based sensor at a 0-based step.
EffectiveParams effective_params(const ScenarioConfig& cfg, int sensor, int step);

/// One sensor's measurements for one step, positions in FOV coordinates.
/// The detected object measurement, when present, is the last element.
using Scan = std::vector<Eigen::VectorXd>;

/// Ground truth plus all sensor scans for one Monte Carlo run.
struct GeneratedRun {
    std::vector<Eigen::Vector4d> truth;       ///< per step, after motion
    std::vector<std::vector<Scan>> scans;     ///< [step][sensor-1]
};

/// Samples a full run: the initial state from the configured prior, the
/// constant-velocity trajectory with white-acceleration noise, and per
/// step/sensor the detection (subject to the effective detection
/// probability), measurement noise, and uniform Poisson clutter. The draw
/// order is fixed, so a run is a pure function of (config, run_seed).
GeneratedRun generate_scenario(const ScenarioConfig& cfg, std::uint64_t run_seed);

/// The measurement model the tracker and monitor assume for every sensor:
/// position measurement with the configured nominal noise, clutter rate and
/// detection probability, over the configured field of view.
tracking::SensorModel nominal_sensor(const ScenarioConfig& cfg);

/// The prior track estimate corresponding to the configured initial state.
tracking::TrackState initial_state(const ScenarioConfig& cfg);

} // namespace satrack::sim
