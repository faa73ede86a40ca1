#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "satrack/assess/monitor.hpp"
#include "satrack/assess/references.hpp"
#include "satrack/sim/config.hpp"
#include "satrack/sim/rng.hpp"
#include "satrack/sim/runner.hpp"
#include "satrack/sim/scenario.hpp"
#include "satrack/sl/opinion.hpp"
#include "satrack/sl/threshold.hpp"
#include "satrack/tracking/association.hpp"
#include "satrack/tracking/kalman.hpp"

using namespace satrack;

namespace {

sl::Opinion sample_opinion(sim::Rng& rng, Eigen::Index card) {
    Eigen::VectorXd base(card), counts(card);
    for (Eigen::Index i = 0; i < card; ++i) {
        base(i) = rng.uniform() + 0.05;
        counts(i) = std::floor(rng.uniform() * 20.0);
    }
    base /= base.sum();
    return sl::Opinion::from_evidence(counts, base, static_cast<double>(card));
}

void bm_fuse(benchmark::State& state) {
    sim::Rng rng(1);
    const auto a = sample_opinion(rng, state.range(0));
    const auto b = sample_opinion(rng, state.range(0));
    for (auto _ : state) {
        auto f = sl::fuse_cumulative(a, b);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_fuse)->Arg(2)->Arg(6);

void bm_threshold(benchmark::State& state) {
    double n = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl::dc_threshold({0.99, 2, n}));
        n = n < 1e6 ? n + 1.0 : 10.0;
    }
}
BENCHMARK(bm_threshold);

void bm_associate(benchmark::State& state) {
    const auto cfg = sim::ScenarioConfig{};
    const auto sensor = sim::nominal_sensor(cfg);
    auto track = sim::initial_state(cfg);
    track.mean << 25.0, 50.0, 0.2, 0.0;

    sim::Rng rng(7);
    sim::Scan scan;
    for (int j = 0; j < state.range(0); ++j) {
        Eigen::VectorXd m(2);
        m << rng.uniform(0.0, 200.0), rng.uniform(0.0, 100.0);
        scan.push_back(std::move(m));
    }
    for (auto _ : state) {
        auto assoc = tracking::associate_nn(track, scan, sensor, cfg.gate_prob);
        benchmark::DoNotOptimize(assoc);
    }
}
BENCHMARK(bm_associate)->Arg(4)->Arg(32);

void bm_monitor_step(benchmark::State& state) {
    const auto cfg = sim::ScenarioConfig::demo();
    const auto sensor = sim::nominal_sensor(cfg);
    const auto refs = assess::build_references(sensor, cfg.num_bins, cfg.gate_prob);
    assess::SensorMonitor monitor(
        refs, {cfg.alpha, cfg.trust_decay, cfg.short_window});
    sim::Rng rng(11);
    for (auto _ : state) {
        assess::StepObservation obs;
        obs.miss = rng.uniform() > 0.9;
        obs.statistic = rng.uniform() * 6.0;
        obs.clutter_count = rng.poisson(4.0);
        auto out = monitor.step(obs);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(bm_monitor_step);

void bm_full_run(benchmark::State& state) {
    auto cfg = sim::ScenarioConfig::demo();
    cfg.mc_runs = 1;
    for (auto _ : state) {
        auto result = sim::run_once(cfg, sim::Rng::derive_seed(cfg.seed, 0));
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(bm_full_run)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
