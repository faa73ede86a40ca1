#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "satrack/sim/config.hpp"
#include "satrack/sim/csv.hpp"
#include "satrack/sim/rng.hpp"
#include "satrack/sim/runner.hpp"
#include "satrack/sim/scenario.hpp"
#include "satrack/sim/svg.hpp"

using namespace satrack;
using sim::ScenarioConfig;

TEST_CASE("rng: deterministic, decorrelated streams with sane moments") {
    sim::Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    CHECK(a.uniform() != c.uniform());
    CHECK(sim::Rng::derive_seed(1, 0) != sim::Rng::derive_seed(1, 1));
    CHECK(sim::Rng::derive_seed(1, 0) != sim::Rng::derive_seed(2, 0));

    sim::Rng r(7);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));

    long long total = 0;
    for (int i = 0; i < 100000; ++i) total += r.poisson(4.0);
    CHECK(static_cast<double>(total) / 100000.0 == doctest::Approx(4.0).epsilon(0.02));
    CHECK(r.poisson(0.0) == 0);
    CHECK_THROWS_AS(r.poisson(-1.0), std::invalid_argument);
}

TEST_CASE("config: defaults, full round trip, and precise errors") {
    const ScenarioConfig def = sim::parse_config_text("");
    CHECK(def.num_steps == 600);
    CHECK(def.alpha == 0.99);
    CHECK(def.num_bins == 5);
    CHECK(def.gate_prob == 0.99);
    CHECK(def.trust_decay == 0.995);
    CHECK(def.short_window == 50);
    CHECK(def.mc_runs == 1);
    CHECK(def.disturbances.empty());

    const ScenarioConfig cfg = sim::parse_config_text(
        "# comment\n"
        "num_steps = 10\n"
        "clutter_mean = 2.5   # trailing comment\n"
        "\n"
        "disturbance = 1 3 7 noise_scale 2.0\n"
        "disturbance = 2 0 10 pd_set 0.5\n");
    CHECK(cfg.num_steps == 10);
    CHECK(cfg.clutter_mean == 2.5);
    REQUIRE(cfg.disturbances.size() == 2);
    CHECK(cfg.disturbances[0].kind == sim::Disturbance::Kind::noise_scale);
    CHECK(cfg.disturbances[1].sensor == 2);

    const std::string echoed = sim::resolved_text(cfg);
    CHECK(sim::resolved_text(sim::parse_config_text(echoed)) == echoed);

    SUBCASE("unknown keys are rejected with their line number") {
        try {
            sim::parse_config_text("num_steps = 5\nnot_a_key = 1\n");
            FAIL("expected ConfigError");
        } catch (const sim::ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("line 2") != std::string::npos);
            CHECK(msg.find("not_a_key") != std::string::npos);
        }
    }
    SUBCASE("malformed values are rejected") {
        CHECK_THROWS_AS(sim::parse_config_text("alpha = fast\n"), sim::ConfigError);
        CHECK_THROWS_AS(sim::parse_config_text("num_steps = 5 5\n"), sim::ConfigError);
        CHECK_THROWS_AS(sim::parse_config_text("alpha\n"), sim::ConfigError);
        CHECK_THROWS_AS(sim::parse_config_text("disturbance = 1 3 7 wobble 2\n"),
                        sim::ConfigError);
    }
    SUBCASE("validation catches inconsistent settings") {
        CHECK_THROWS_AS(sim::parse_config_text("alpha = 1.5\n"), sim::ConfigError);
        CHECK_THROWS_AS(sim::parse_config_text("num_bins = 5\ngate_prob = 0.7\n"),
                        sim::ConfigError);
        CHECK_THROWS_AS(sim::parse_config_text("disturbance = 9 0 10 pd_set 0.5\n"),
                        sim::ConfigError);
        CHECK_THROWS_AS(sim::parse_config_text("disturbance = 1 10 10 pd_set 0.5\n"),
                        sim::ConfigError);
    }
}

TEST_CASE("demo preset: three staged disturbances on sensor 1") {
    const ScenarioConfig cfg = ScenarioConfig::demo();
    cfg.validate();
    CHECK(cfg.mc_runs == 200);
    CHECK(cfg.num_sensors == 3);
    REQUIRE(cfg.disturbances.size() == 3);
    for (const auto& d : cfg.disturbances) CHECK(d.sensor == 1);
    CHECK(cfg.disturbances[0].from == 100);
    CHECK(cfg.disturbances[0].to == 200);
    CHECK(cfg.disturbances[1].kind == sim::Disturbance::Kind::clutter_scale);
    CHECK(cfg.disturbances[1].value == 0.5);
    CHECK(cfg.disturbances[2].kind == sim::Disturbance::Kind::pd_set);
    CHECK(cfg.disturbances[2].value == 0.6);
}

TEST_CASE("disturbance windows are half-open step intervals") {
    const ScenarioConfig cfg = ScenarioConfig::demo();
    CHECK(sim::effective_params(cfg, 1, 99).meas_noise_std ==
          doctest::Approx(cfg.meas_noise_std));
    CHECK(sim::effective_params(cfg, 1, 100).meas_noise_std ==
          doctest::Approx(4.0 * cfg.meas_noise_std));
    CHECK(sim::effective_params(cfg, 1, 199).meas_noise_std ==
          doctest::Approx(4.0 * cfg.meas_noise_std));
    CHECK(sim::effective_params(cfg, 1, 200).meas_noise_std ==
          doctest::Approx(cfg.meas_noise_std));
    CHECK(sim::effective_params(cfg, 2, 150).meas_noise_std ==
          doctest::Approx(cfg.meas_noise_std));
    CHECK(sim::effective_params(cfg, 1, 320).clutter_mean == doctest::Approx(2.0));
    CHECK(sim::effective_params(cfg, 1, 470).detection_prob == doctest::Approx(0.6));
}

TEST_CASE("scenario generation: deterministic and statistically plausible") {
    ScenarioConfig cfg;
    cfg.num_steps = 400;
    cfg.mc_runs = 1;

    const auto run1 = sim::generate_scenario(cfg, 1234);
    const auto run2 = sim::generate_scenario(cfg, 1234);
    const auto run3 = sim::generate_scenario(cfg, 1235);
    REQUIRE(run1.truth.size() == 400);
    REQUIRE(run1.scans.size() == 400);
    CHECK((run1.truth[399] - run2.truth[399]).norm() == 0.0);
    CHECK((run1.truth[399] - run3.truth[399]).norm() != 0.0);
    REQUIRE(run1.scans[0].size() == 3);

    // Counting measurements over sensors and steps: the object contributes
    // p_D per scan on top of the Poisson clutter.
    double total = 0.0;
    for (const auto& step : run1.scans)
        for (const auto& scan : step) total += static_cast<double>(scan.size());
    const double per_scan = total / (400.0 * 3.0);
    CHECK(per_scan == doctest::Approx(4.0 + 0.9).epsilon(0.05));

    // The trajectory drifts only by the (small) process noise.
    CHECK(run1.truth[399](0) ==
          doctest::Approx(cfg.init_x + 400.0 * cfg.init_vx).epsilon(0.5));
}

TEST_CASE("single run: misses recorded, NIS follows detections, errors bounded") {
    ScenarioConfig cfg;
    cfg.num_steps = 300;
    const auto res = sim::run_once(cfg, sim::Rng::derive_seed(cfg.seed, 0));
    REQUIRE(res.steps.size() == 300);
    REQUIRE(res.steps[0].sensors.size() == 3);
    CHECK(res.diagnostics.max_consecutive_misses.size() == 3);

    int nis_present = 0;
    for (const auto& step : res.steps) {
        CHECK(std::isfinite(step.err_m));
        CHECK(step.err_m < 50.0);
        for (const auto& sens : step.sensors)
            if (sens.nis) ++nis_present;
    }
    // After the first detection every later step carries a NIS summary.
    CHECK(nis_present > 3 * 250);
    CHECK(!res.diagnostics.covariance_diverged);
    CHECK(!res.diagnostics.left_fov);
}

TEST_CASE("monte carlo: averaging pools the NIS count and is thread invariant") {
    ScenarioConfig cfg;
    cfg.num_steps = 120;
    cfg.mc_runs = 8;

    const auto seq = sim::run_monte_carlo(cfg, 1);
    const auto par = sim::run_monte_carlo(cfg, 4);
    REQUIRE(seq.averaged.size() == 120);
    CHECK(seq.runs == 8);

    std::ostringstream csv_seq, csv_par;
    sim::write_csv(csv_seq, seq);
    sim::write_csv(csv_par, par);
    CHECK(csv_seq.str() == csv_par.str());

    const auto& late = seq.averaged[119].sensors[0];
    REQUIRE(late.nis.has_value());
    CHECK(late.nis->runs_present == 8);
    // Eight runs of a 50-deep window pool several hundred samples.
    CHECK(late.nis->pooled_count > 300);
    CHECK(late.nis->ci_hi < 3.0);
    CHECK(late.nis->ci_lo > 1.0);
    // A healthy consistent filter averages near the innovation dimension.
    CHECK(late.nis->avg == doctest::Approx(2.0).epsilon(0.25));

    for (int a = 0; a < assess::kNumAspects; ++a) {
        const auto& asp = late.aspects[static_cast<std::size_t>(a)];
        CHECK(std::isfinite(asp.dc_score));
        CHECK(asp.dc_score >= 0.0);
        CHECK(asp.threshold > 0.0);
    }
}

TEST_CASE("csv: schema, ordering, and stable formatting") {
    ScenarioConfig cfg;
    cfg.num_steps = 3;
    cfg.mc_runs = 2;
    const auto mc = sim::run_monte_carlo(cfg, 1);
    std::ostringstream out;
    sim::write_csv(out, mc);
    std::istringstream in(out.str());

    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "step,sensor,metric,value");
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("0,0,err_m,", 0) == 0);
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("0,1,dc_assoc,", 0) == 0);

    // Within one (step, sensor) block the metric names must be sorted.
    in.seekg(0);
    std::getline(in, line); // header
    std::string prev_metric;
    int prev_step = -1, prev_sensor = -1;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        const int step = std::stoi(line.substr(0, c1));
        const int sensor = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string metric = line.substr(c2 + 1, c3 - c2 - 1);
        if (step == prev_step && sensor == prev_sensor)
            CHECK(prev_metric < metric);
        CHECK(step >= prev_step);
        prev_step = step;
        prev_sensor = sensor;
        prev_metric = metric;
    }
    // 3 steps x (1 err row + 3 sensors x 11 metric rows) once NIS is present;
    // at minimum the aspect metrics are always there.
    CHECK(rows >= 3 * (1 + 3 * 8));
}

TEST_CASE("svg: self-contained panels per aspect plus the NIS band") {
    ScenarioConfig cfg;
    cfg.num_steps = 40;
    cfg.mc_runs = 2;
    cfg.disturbances = {{1, 10, 20, sim::Disturbance::Kind::noise_scale, 4.0}};
    const auto mc = sim::run_monte_carlo(cfg, 1);
    std::ostringstream out;
    sim::write_svg(out, mc, cfg, 1);
    const std::string svg = out.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("overall conflict") != std::string::npos);
    CHECK(svg.find("time-average NIS") != std::string::npos);

    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++polylines;
    CHECK(polylines == 4 * 2 + 3); // dc+threshold per aspect, avg/hi/lo for NIS
}
