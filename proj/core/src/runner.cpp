#include "satrack/sim/runner.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "satrack/tracking/association.hpp"

namespace satrack::sim {

namespace {

// A covariance trace this far above the field-of-view scale means the
// filter no longer describes anything physical.
double divergence_bound(const ScenarioConfig& cfg) {
    const double dx = cfg.fov_x_hi - cfg.fov_x_lo;
    const double dy = cfg.fov_y_hi - cfg.fov_y_lo;
    return dx * dx + dy * dy;
}

} // namespace

RunResult run_once(const ScenarioConfig& cfg, std::uint64_t run_seed) {
    cfg.validate();
    const GeneratedRun gen = generate_scenario(cfg, run_seed);
    const tracking::SensorModel sensor = nominal_sensor(cfg);
    const tracking::MotionModel motion =
        tracking::MotionModel::constant_velocity_2d(cfg.dt, cfg.accel_std);
    const assess::ReferenceSet refs =
        assess::build_references(sensor, cfg.num_bins, cfg.gate_prob);
    const assess::MonitorParams mon_params{cfg.alpha, cfg.trust_decay,
                                           cfg.short_window};

    std::vector<assess::SensorMonitor> monitors;
    std::vector<assess::NisTracker> nis;
    monitors.reserve(static_cast<std::size_t>(cfg.num_sensors));
    nis.reserve(static_cast<std::size_t>(cfg.num_sensors));
    for (int s = 0; s < cfg.num_sensors; ++s) {
        monitors.emplace_back(refs, mon_params);
        nis.emplace_back(cfg.nis_window);
    }

    RunResult out;
    out.steps.reserve(static_cast<std::size_t>(cfg.num_steps));
    out.diagnostics.max_consecutive_misses.assign(
        static_cast<std::size_t>(cfg.num_sensors), 0);
    std::vector<int> consec(static_cast<std::size_t>(cfg.num_sensors), 0);

    tracking::TrackState state = initial_state(cfg);
    const double cov_bound = divergence_bound(cfg);

    for (int k = 0; k < cfg.num_steps; ++k) {
        state = tracking::predict(state, motion);

        StepRecord rec;
        rec.sensors.resize(static_cast<std::size_t>(cfg.num_sensors));
        for (int s = 0; s < cfg.num_sensors; ++s) {
            const Scan& scan = gen.scans[static_cast<std::size_t>(k)]
                                        [static_cast<std::size_t>(s)];
            const tracking::Association assoc =
                tracking::associate_nn(state, scan, sensor, cfg.gate_prob);
            state = tracking::update(state, assoc, sensor);

            const assess::StepObservation obs =
                assess::observe_from(assoc, static_cast<int>(scan.size()));
            auto& srec = rec.sensors[static_cast<std::size_t>(s)];
            const assess::MonitorOutput mon =
                monitors[static_cast<std::size_t>(s)].step(obs);
            srec.aspects = mon.aspects;
            if (mon.statistic) nis[static_cast<std::size_t>(s)].push(*mon.statistic);
            srec.nis = nis[static_cast<std::size_t>(s)].summary();

            auto& streak = consec[static_cast<std::size_t>(s)];
            streak = obs.miss ? streak + 1 : 0;
            auto& worst = out.diagnostics.max_consecutive_misses[static_cast<std::size_t>(s)];
            if (streak > worst) worst = streak;
        }

        const Eigen::Vector4d& truth = gen.truth[static_cast<std::size_t>(k)];
        rec.err_m = std::hypot(truth(0) - state.mean(0), truth(1) - state.mean(1));
        out.steps.push_back(std::move(rec));

        if (state.cov.trace() > cov_bound) out.diagnostics.covariance_diverged = true;
        if (truth(0) < cfg.fov_x_lo || truth(0) > cfg.fov_x_hi ||
            truth(1) < cfg.fov_y_lo || truth(1) > cfg.fov_y_hi)
            out.diagnostics.left_fov = true;
    }
    return out;
}

MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg, int num_threads) {
    cfg.validate();
    const int runs = cfg.mc_runs;
    std::vector<RunResult> results(static_cast<std::size_t>(runs));

    const int workers = std::max(1, std::min(num_threads, runs));
    if (workers == 1) {
        for (int r = 0; r < runs; ++r)
            results[static_cast<std::size_t>(r)] =
                run_once(cfg, Rng::derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int r = next.fetch_add(1); r < runs; r = next.fetch_add(1)) {
                        results[static_cast<std::size_t>(r)] = run_once(
                            cfg, Rng::derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    MonteCarloResult mc;
    mc.runs = runs;
    mc.averaged.resize(static_cast<std::size_t>(cfg.num_steps));
    for (auto& step : mc.averaged)
        step.sensors.resize(static_cast<std::size_t>(cfg.num_sensors));

    // Fixed accumulation order (step-major, then run index) keeps the sums,
    // and therefore the CSV bytes, independent of the thread count.
    for (int k = 0; k < cfg.num_steps; ++k) {
        auto& avg = mc.averaged[static_cast<std::size_t>(k)];
        for (int r = 0; r < runs; ++r)
            avg.err_m += results[static_cast<std::size_t>(r)]
                             .steps[static_cast<std::size_t>(k)].err_m;
        avg.err_m /= runs;

        for (int s = 0; s < cfg.num_sensors; ++s) {
            auto& asens = avg.sensors[static_cast<std::size_t>(s)];
            for (auto& acc : asens.aspects)
                acc = assess::AspectOutput{0.0, 0.0, 0.0, 0.0, false};
            double nis_sum = 0.0;
            long long pooled = 0;
            int present = 0;
            for (int r = 0; r < runs; ++r) {
                const auto& srec = results[static_cast<std::size_t>(r)]
                                       .steps[static_cast<std::size_t>(k)]
                                       .sensors[static_cast<std::size_t>(s)];
                for (int a = 0; a < assess::kNumAspects; ++a) {
                    auto& acc = asens.aspects[static_cast<std::size_t>(a)];
                    const auto& cur = srec.aspects[static_cast<std::size_t>(a)];
                    acc.dc_score += cur.dc_score;
                    acc.threshold += cur.threshold;
                    acc.uncertainty += cur.uncertainty;
                    acc.evidence += cur.evidence;
                }
                if (srec.nis) {
                    nis_sum += srec.nis->avg;
                    pooled += srec.nis->count;
                    ++present;
                }
            }
            for (int a = 0; a < assess::kNumAspects; ++a) {
                auto& acc = asens.aspects[static_cast<std::size_t>(a)];
                acc.dc_score /= runs;
                acc.threshold /= runs;
                acc.uncertainty = acc.uncertainty / runs;
                acc.evidence /= runs;
                acc.flag = acc.evidence >= static_cast<double>(cfg.short_window) &&
                           acc.dc_score > acc.threshold;
            }
            if (present > 0) {
                AveragedNis an;
                an.avg = nis_sum / present;
                an.pooled_count = pooled;
                an.runs_present = present;
                assess::NisTracker::confidence_interval(static_cast<int>(pooled),
                                                        an.ci_lo, an.ci_hi);
                asens.nis = an;
            }
        }
    }

    for (const auto& res : results) {
        bool long_miss = false;
        for (int m : res.diagnostics.max_consecutive_misses)
            if (m > 20) long_miss = true;
        if (long_miss) ++mc.runs_with_long_miss;
        if (res.diagnostics.covariance_diverged) ++mc.runs_cov_diverged;
        if (res.diagnostics.left_fov) ++mc.runs_left_fov;
    }
    return mc;
}

} // namespace satrack::sim
