#include "satrack/sim/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace satrack::sim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) fail(line, "trailing characters after number '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + v + "'");
    }
}

long long parse_int(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) fail(line, "trailing characters after integer '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size()) fail(line, "trailing characters after integer '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an unsigned integer, got '" + v + "'");
    }
}

Disturbance parse_disturbance(const std::string& v, int line) {
    std::istringstream in(v);
    Disturbance d;
    std::string kind;
    long long sensor = 0, from = 0, to = 0;
    double value = 0.0;
    if (!(in >> sensor >> from >> to >> kind >> value))
        fail(line, "disturbance needs '<sensor> <from> <to> <kind> <value>'");
    std::string rest;
    if (in >> rest) fail(line, "trailing characters in disturbance '" + rest + "'");
    d.sensor = static_cast<int>(sensor);
    d.from = static_cast<int>(from);
    d.to = static_cast<int>(to);
    d.value = value;
    if (kind == "noise_scale") d.kind = Disturbance::Kind::noise_scale;
    else if (kind == "clutter_scale") d.kind = Disturbance::Kind::clutter_scale;
    else if (kind == "pd_set") d.kind = Disturbance::Kind::pd_set;
    else fail(line, "unknown disturbance kind '" + kind + "'");
    return d;
}

const char* kind_name(Disturbance::Kind k) {
    switch (k) {
        case Disturbance::Kind::noise_scale: return "noise_scale";
        case Disturbance::Kind::clutter_scale: return "clutter_scale";
        case Disturbance::Kind::pd_set: return "pd_set";
    }
    return "?";
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

ScenarioConfig ScenarioConfig::demo() {
    ScenarioConfig cfg;
    cfg.alpha = 0.8;
    cfg.num_bins = 3;
    cfg.gate_prob = 0.999;
    cfg.trust_decay = 0.9969;
    cfg.short_window = 50;
    cfg.nis_window = 50;
    cfg.mc_runs = 200;
    cfg.disturbances = {
        {1, 100, 200, Disturbance::Kind::noise_scale, 4.0},
        {1, 300, 350, Disturbance::Kind::clutter_scale, 0.5},
        {1, 450, 500, Disturbance::Kind::pd_set, 0.6},
    };
    return cfg;
}

void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
    if (num_steps < 1) fail("num_steps must be >= 1");
    if (!(dt > 0.0)) fail("dt must be > 0");
    if (!(fov_x_hi > fov_x_lo) || !(fov_y_hi > fov_y_lo))
        fail("field of view must have positive extent");
    if (init_pos_std < 0.0 || init_vel_std < 0.0)
        fail("initial standard deviations must be >= 0");
    if (accel_std < 0.0) fail("accel_std must be >= 0");
    if (num_sensors < 1) fail("num_sensors must be >= 1");
    if (!(detection_prob >= 0.0 && detection_prob <= 1.0))
        fail("detection_prob must lie in [0, 1]");
    if (!(clutter_mean > 0.0)) fail("clutter_mean must be > 0");
    if (!(meas_noise_std > 0.0)) fail("meas_noise_std must be > 0");
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0, 1)");
    if (num_bins < 2) fail("num_bins must be >= 2");
    if (!(gate_prob > 0.0 && gate_prob < 1.0)) fail("gate_prob must lie in (0, 1)");
    if (!(gate_prob > static_cast<double>(num_bins - 1) / num_bins))
        fail("gate_prob must exceed (num_bins - 1) / num_bins");
    if (!(trust_decay >= 0.0 && trust_decay <= 1.0))
        fail("trust_decay must lie in [0, 1]");
    if (short_window < 1) fail("short_window must be >= 1");
    if (nis_window < 1) fail("nis_window must be >= 1");
    if (mc_runs < 1) fail("mc_runs must be >= 1");
    for (const auto& d : disturbances) {
        if (d.sensor < 1 || d.sensor > num_sensors)
            fail("disturbance sensor index out of range");
        if (d.from < 0 || d.to > num_steps || d.from >= d.to)
            fail("disturbance interval must satisfy 0 <= from < to <= num_steps");
        if (d.kind == Disturbance::Kind::pd_set) {
            if (!(d.value >= 0.0 && d.value <= 1.0))
                fail("pd_set value must lie in [0, 1]");
        } else if (!(d.value > 0.0)) {
            fail("scale disturbance value must be > 0");
        }
    }
}

ScenarioConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    cfg.disturbances.clear();

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (val.empty()) fail(line, "empty value for key '" + key + "'");

        if (key == "num_steps") cfg.num_steps = static_cast<int>(parse_int(val, line));
        else if (key == "dt") cfg.dt = parse_double(val, line);
        else if (key == "fov_x_lo") cfg.fov_x_lo = parse_double(val, line);
        else if (key == "fov_x_hi") cfg.fov_x_hi = parse_double(val, line);
        else if (key == "fov_y_lo") cfg.fov_y_lo = parse_double(val, line);
        else if (key == "fov_y_hi") cfg.fov_y_hi = parse_double(val, line);
        else if (key == "init_x") cfg.init_x = parse_double(val, line);
        else if (key == "init_y") cfg.init_y = parse_double(val, line);
        else if (key == "init_vx") cfg.init_vx = parse_double(val, line);
        else if (key == "init_vy") cfg.init_vy = parse_double(val, line);
        else if (key == "init_pos_std") cfg.init_pos_std = parse_double(val, line);
        else if (key == "init_vel_std") cfg.init_vel_std = parse_double(val, line);
        else if (key == "accel_std") cfg.accel_std = parse_double(val, line);
        else if (key == "num_sensors") cfg.num_sensors = static_cast<int>(parse_int(val, line));
        else if (key == "detection_prob") cfg.detection_prob = parse_double(val, line);
        else if (key == "clutter_mean") cfg.clutter_mean = parse_double(val, line);
        else if (key == "meas_noise_std") cfg.meas_noise_std = parse_double(val, line);
        else if (key == "alpha") cfg.alpha = parse_double(val, line);
        else if (key == "num_bins") cfg.num_bins = static_cast<int>(parse_int(val, line));
        else if (key == "gate_prob") cfg.gate_prob = parse_double(val, line);
        else if (key == "trust_decay") cfg.trust_decay = parse_double(val, line);
        else if (key == "short_window") cfg.short_window = static_cast<int>(parse_int(val, line));
        else if (key == "nis_window") cfg.nis_window = static_cast<int>(parse_int(val, line));
        else if (key == "mc_runs") cfg.mc_runs = static_cast<int>(parse_int(val, line));
        else if (key == "seed") cfg.seed = parse_u64(val, line);
        else if (key == "disturbance") cfg.disturbances.push_back(parse_disturbance(val, line));
        else fail(line, "unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string resolved_text(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "num_steps = " << cfg.num_steps << "\n";
    out << "dt = " << fmt_double(cfg.dt) << "\n";
    out << "fov_x_lo = " << fmt_double(cfg.fov_x_lo) << "\n";
    out << "fov_x_hi = " << fmt_double(cfg.fov_x_hi) << "\n";
    out << "fov_y_lo = " << fmt_double(cfg.fov_y_lo) << "\n";
    out << "fov_y_hi = " << fmt_double(cfg.fov_y_hi) << "\n";
    out << "init_x = " << fmt_double(cfg.init_x) << "\n";
    out << "init_y = " << fmt_double(cfg.init_y) << "\n";
    out << "init_vx = " << fmt_double(cfg.init_vx) << "\n";
    out << "init_vy = " << fmt_double(cfg.init_vy) << "\n";
    out << "init_pos_std = " << fmt_double(cfg.init_pos_std) << "\n";
    out << "init_vel_std = " << fmt_double(cfg.init_vel_std) << "\n";
    out << "accel_std = " << fmt_double(cfg.accel_std) << "\n";
    out << "num_sensors = " << cfg.num_sensors << "\n";
    out << "detection_prob = " << fmt_double(cfg.detection_prob) << "\n";
    out << "clutter_mean = " << fmt_double(cfg.clutter_mean) << "\n";
    out << "meas_noise_std = " << fmt_double(cfg.meas_noise_std) << "\n";
    out << "alpha = " << fmt_double(cfg.alpha) << "\n";
    out << "num_bins = " << cfg.num_bins << "\n";
    out << "gate_prob = " << fmt_double(cfg.gate_prob) << "\n";
    out << "trust_decay = " << fmt_double(cfg.trust_decay) << "\n";
    out << "short_window = " << cfg.short_window << "\n";
    out << "nis_window = " << cfg.nis_window << "\n";
    out << "mc_runs = " << cfg.mc_runs << "\n";
    out << "seed = " << cfg.seed << "\n";
    for (const auto& d : cfg.disturbances) {
        out << "disturbance = " << d.sensor << " " << d.from << " " << d.to << " "
            << kind_name(d.kind) << " " << fmt_double(d.value) << "\n";
    }
    return out.str();
}

} // namespace satrack::sim
