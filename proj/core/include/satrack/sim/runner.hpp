#pragma once

#include <optional>
#include <vector>

#include "satrack/assess/monitor.hpp"
#include "satrack/assess/nis.hpp"
#include "satrack/sim/config.hpp"
#include "satrack/sim/scenario.hpp"

namespace satrack::sim {

/// One sensor's monitor and NIS outputs at one step.
struct SensorRecord {
    std::array<assess::AspectOutput, assess::kNumAspects> aspects;
    std::optional<assess::NisTracker::Summary> nis;
};

/// Everything recorded at one step of one run (or of the averaged trace).
struct StepRecord {
    double err_m = 0.0; ///< Euclidean position error of the track estimate
    std::vector<SensorRecord> sensors;
};

/// Health telemetry of a single run.
struct RunDiagnostics {
    std::vector<int> max_consecutive_misses; ///< per sensor
    bool covariance_diverged = false;        ///< trace exceeded the sanity bound
    bool left_fov = false;                   ///< truth exited the field of view
};

struct RunResult {
    std::vector<StepRecord> steps;
    RunDiagnostics diagnostics;
};

/// Simulates and tracks one run: one prediction per step, then each sensor
/// in index order gates, associates and updates the shared track, feeds its
/// monitor, and contributes to its NIS average. Deterministic in
/// (config, run_seed).
RunResult run_once(const ScenarioConfig& cfg, std::uint64_t run_seed);

/// NIS fields of an averaged step: mean of per-run averages over the runs
/// where a value exists, with the confidence interval recomputed for the
/// pooled sample count (a Monte-Carlo average of K-sample means is an
/// average over the union of the samples).
struct AveragedNis {
    double avg = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    long long pooled_count = 0;
    int runs_present = 0;
};

struct AveragedSensorRecord {
    std::array<assess::AspectOutput, assess::kNumAspects> aspects;
    std::optional<AveragedNis> nis;
};

struct AveragedStepRecord {
    double err_m = 0.0;
    std::vector<AveragedSensorRecord> sensors;
};

struct MonteCarloResult {
    std::vector<AveragedStepRecord> averaged; ///< per step
    int runs = 0;
    // Diagnostics tallies over the runs.
    int runs_with_long_miss = 0; ///< > 20 consecutive misses on some sensor
    int runs_cov_diverged = 0;
    int runs_left_fov = 0;
};

/// Runs cfg.mc_runs independent runs (run r seeded from the master seed and
/// r) and averages the per-step records in run-index order. num_threads > 1
/// distributes the runs over worker threads; the result is byte-identical
/// for any thread count because each run's output depends only on its seed
/// and the reduction order is fixed.
MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg, int num_threads = 1);

} // namespace satrack::sim
