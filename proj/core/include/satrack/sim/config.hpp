#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satrack::sim {

/// A scheduled deviation of one sensor from its nominal parameters over the
/// half-open step interval [from, to).
struct Disturbance {
    enum class Kind { noise_scale, clutter_scale, pd_set };
    int sensor = 1; ///< 1-based sensor index
    int from = 0;
    int to = 0;
    Kind kind = Kind::noise_scale;
    double value = 1.0;
};

/// Full description of a simulated tracking scenario plus the monitor and
/// harness settings. Defaults describe a healthy single run; the bundled
/// `demo()` preset adds the three-sensor disturbance schedule.
struct ScenarioConfig {
    // Trajectory and field of view.
    int num_steps = 600;
    double dt = 1.0;
    double fov_x_lo = 0.0, fov_x_hi = 200.0;
    double fov_y_lo = 0.0, fov_y_hi = 100.0;
    double init_x = 25.0, init_y = 50.0;
    double init_vx = 0.2, init_vy = 0.0;
    double init_pos_std = 3.0, init_vel_std = 0.02;
    double accel_std = 0.002;

    // Sensor suite (homogeneous nominal parameters).
    int num_sensors = 3;
    double detection_prob = 0.9;
    double clutter_mean = 4.0;
    double meas_noise_std = 0.75;

    // Monitor.
    double alpha = 0.99;
    int num_bins = 5;
    double gate_prob = 0.99;
    double trust_decay = 0.995;
    int short_window = 50;
    int nis_window = 50;

    // Harness.
    int mc_runs = 1;
    std::uint64_t seed = 20260814ULL;

    std::vector<Disturbance> disturbances;

    /// Bundled three-sensor demo: sensor 1 degrades in three scheduled
    /// windows (measurement noise x4 over [100,200), clutter halved over
    /// [300,350), detection probability dropped to 0.6 over [450,500))
    /// while sensors 2 and 3 stay nominal; 200 Monte Carlo runs.
    static ScenarioConfig demo();

    double fov_volume() const { return (fov_x_hi - fov_x_lo) * (fov_y_hi - fov_y_lo); }

    /// Throws ConfigError if any value is out of range or inconsistent.
    void validate() const;
};

/// Error in a config file or value; carries the offending line when parsed
/// from text.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses `key = value` lines ('#' starts a comment, blank lines ignored;
/// `disturbance = <sensor> <from> <to> <kind> <value>` may repeat). Unknown
/// keys are an error and are reported with their line number. Omitted keys
/// keep their defaults. Throws ConfigError.
ScenarioConfig parse_config_text(const std::string& text);

/// parse_config_text over the contents of `path`. Throws ConfigError, also
/// for an unreadable file.
ScenarioConfig parse_config(const std::string& path);

/// The full effective configuration, one `key = value` per line, in the
/// grammar accepted by parse_config_text. Round-trips exactly.
std::string resolved_text(const ScenarioConfig& cfg);

} // namespace satrack::sim
