#include "satrack/sim/csv.hpp"

#include <cstdio>

namespace satrack::sim {

namespace {

void row(std::ostream& out, int step, int sensor, const char* metric, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d,%d,%s,%.6g", step, sensor, metric, value);
    out << buf << "\n";
}

// Aspect indices reordered so the emitted metrics are lexicographic:
// assoc < clutter < meas < overall.
constexpr int kAspectOrder[assess::kNumAspects] = {1, 3, 2, 0};
constexpr const char* kDcNames[assess::kNumAspects] = {"dc_assoc", "dc_clutter",
                                                       "dc_meas", "dc_overall"};
constexpr const char* kThrNames[assess::kNumAspects] = {"thr_assoc", "thr_clutter",
                                                        "thr_meas", "thr_overall"};
constexpr const char* kUNames[assess::kNumAspects] = {"u_assoc", "u_clutter",
                                                      "u_meas", "u_overall"};

} // namespace

void write_csv(std::ostream& out, const MonteCarloResult& mc) {
    out << "step,sensor,metric,value\n";
    for (std::size_t k = 0; k < mc.averaged.size(); ++k) {
        const auto& step = mc.averaged[k];
        const int ks = static_cast<int>(k);
        row(out, ks, 0, "err_m", step.err_m);
        for (std::size_t s = 0; s < step.sensors.size(); ++s) {
            const auto& sens = step.sensors[s];
            const int sid = static_cast<int>(s) + 1;
            for (int i = 0; i < assess::kNumAspects; ++i)
                row(out, ks, sid, kDcNames[i],
                    sens.aspects[static_cast<std::size_t>(kAspectOrder[i])].dc_score);
            if (sens.nis) {
                row(out, ks, sid, "nis_avg", sens.nis->avg);
                row(out, ks, sid, "nis_hi", sens.nis->ci_hi);
                row(out, ks, sid, "nis_lo", sens.nis->ci_lo);
            }
            for (int i = 0; i < assess::kNumAspects; ++i)
                row(out, ks, sid, kThrNames[i],
                    sens.aspects[static_cast<std::size_t>(kAspectOrder[i])].threshold);
            for (int i = 0; i < assess::kNumAspects; ++i)
                row(out, ks, sid, kUNames[i],
                    sens.aspects[static_cast<std::size_t>(kAspectOrder[i])].uncertainty);
        }
    }
}

} // namespace satrack::sim
