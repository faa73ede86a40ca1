#include "satrack/sim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace satrack::sim {

namespace {

constexpr double kWidth = 960.0;
constexpr double kPanelH = 150.0;
constexpr double kMarginL = 60.0, kMarginR = 20.0, kMarginT = 30.0, kGap = 36.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Panel {
    std::string title;
    std::vector<std::pair<std::string, std::vector<double>>> series; // name -> values
};

void render_panel(std::ostream& out, const Panel& panel, double top, int steps,
                  const std::vector<std::pair<int, int>>& shades) {
    const double plot_w = kWidth - kMarginL - kMarginR;
    const double x0 = kMarginL;

    double vmax = 1e-9;
    for (const auto& [name, vals] : panel.series)
        for (double v : vals)
            if (std::isfinite(v)) vmax = std::max(vmax, v);
    vmax *= 1.08;

    auto sx = [&](int k) { return x0 + plot_w * k / std::max(1, steps - 1); };
    auto sy = [&](double v) { return top + kPanelH * (1.0 - std::clamp(v / vmax, 0.0, 1.0)); };

    for (const auto& [from, to] : shades) {
        out << "<rect x=\"" << fmt(sx(from)) << "\" y=\"" << fmt(top) << "\" width=\""
            << fmt(sx(std::min(to, steps - 1)) - sx(from)) << "\" height=\"" << fmt(kPanelH)
            << "\" fill=\"#fbe3c8\"/>\n";
    }
    out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(plot_w)
        << "\" height=\"" << fmt(kPanelH)
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt(x0) << "\" y=\"" << fmt(top - 8.0)
        << "\" font-size=\"13\" font-family=\"sans-serif\">" << panel.title
        << "  (max " << fmt(vmax / 1.08) << ")</text>\n";

    static constexpr const char* kColors[] = {"#1b6ca8", "#c0392b", "#2e8b57"};
    static constexpr const char* kDashes[] = {"", "6,4", "2,3"};
    for (std::size_t i = 0; i < panel.series.size(); ++i) {
        const auto& vals = panel.series[i].second;
        out << "<polyline fill=\"none\" stroke=\"" << kColors[i % 3]
            << "\" stroke-width=\"1.2\"";
        if (kDashes[i % 3][0]) out << " stroke-dasharray=\"" << kDashes[i % 3] << "\"";
        out << " points=\"";
        for (int k = 0; k < steps; ++k) {
            const double v = vals[static_cast<std::size_t>(k)];
            if (!std::isfinite(v)) continue;
            out << fmt(sx(k)) << "," << fmt(sy(v)) << " ";
        }
        out << "\"/>\n";
        out << "<text x=\"" << fmt(kWidth - kMarginR - 130.0 + 0.0) << "\" y=\""
            << fmt(top + 14.0 + 14.0 * static_cast<double>(i)) << "\" font-size=\"11\" fill=\""
            << kColors[i % 3] << "\" font-family=\"sans-serif\">" << panel.series[i].first
            << "</text>\n";
    }
}

} // namespace

void write_svg(std::ostream& out, const MonteCarloResult& mc,
               const ScenarioConfig& cfg, int sensor) {
    const int steps = static_cast<int>(mc.averaged.size());
    const std::size_t sidx = static_cast<std::size_t>(sensor - 1);

    std::vector<Panel> panels;
    for (int i = 0; i < assess::kNumAspects; ++i) {
        Panel p;
        p.title = "sensor " + std::to_string(sensor) + " " +
                  assess::kAspectNames[i] + " conflict";
        std::vector<double> dc(static_cast<std::size_t>(steps));
        std::vector<double> thr(static_cast<std::size_t>(steps));
        for (int k = 0; k < steps; ++k) {
            const auto& a = mc.averaged[static_cast<std::size_t>(k)]
                                .sensors[sidx].aspects[static_cast<std::size_t>(i)];
            dc[static_cast<std::size_t>(k)] = a.dc_score;
            thr[static_cast<std::size_t>(k)] = a.threshold;
        }
        p.series = {{"dc", std::move(dc)}, {"threshold", std::move(thr)}};
        panels.push_back(std::move(p));
    }
    {
        Panel p;
        p.title = "sensor " + std::to_string(sensor) + " time-average NIS";
        const double nan = std::numeric_limits<double>::quiet_NaN();
        std::vector<double> avg(static_cast<std::size_t>(steps), nan);
        std::vector<double> lo(static_cast<std::size_t>(steps), nan);
        std::vector<double> hi(static_cast<std::size_t>(steps), nan);
        for (int k = 0; k < steps; ++k) {
            const auto& n = mc.averaged[static_cast<std::size_t>(k)].sensors[sidx].nis;
            if (!n) continue;
            avg[static_cast<std::size_t>(k)] = n->avg;
            lo[static_cast<std::size_t>(k)] = n->ci_lo;
            hi[static_cast<std::size_t>(k)] = n->ci_hi;
        }
        p.series = {{"nis", std::move(avg)}, {"ci high", std::move(hi)},
                    {"ci low", std::move(lo)}};
        panels.push_back(std::move(p));
    }

    std::vector<std::pair<int, int>> shades;
    for (const auto& d : cfg.disturbances)
        if (d.sensor == sensor) shades.emplace_back(d.from, d.to);

    const double height =
        kMarginT + static_cast<double>(panels.size()) * (kPanelH + kGap);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(kWidth)
        << " " << fmt(height) << "\" width=\"" << fmt(kWidth) << "\" height=\""
        << fmt(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double top = kMarginT;
    for (const auto& p : panels) {
        render_panel(out, p, top, steps, shades);
        top += kPanelH + kGap;
    }
    out << "</svg>\n";
}

} // namespace satrack::sim
