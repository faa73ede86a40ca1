#pragma once

#include "satrack/assess/binning.hpp"
#include "satrack/sl/opinion.hpp"
#include "satrack/tracking/kalman.hpp"

namespace satrack::assess {

/// The four monitored aspects of sensor behavior.
enum class Aspect { overall = 0, association = 1, measurement = 2, clutter = 3 };
inline constexpr int kNumAspects = 4;
inline constexpr const char* kAspectNames[kNumAspects] = {
    "overall", "assoc", "meas", "clutter"};

/// Nominal (dogmatic, zero-uncertainty) opinions describing how a healthy
/// sensor's association outcomes should distribute, one per aspect. The base
/// rate of every opinion equals its belief, and evidence opinions built
/// against these references share the same base rates.
struct ReferenceSet {
    sl::Opinion overall;     // [miss, statistic bin 1..B]; cardinality B+1
    sl::Opinion association; // [associated, not associated]; cardinality 2
    sl::Opinion measurement; // [statistic bin 1..B]; cardinality B
    sl::Opinion clutter;     // [low, mid, high] count bins; cardinality 3
    AspectBinning binning;

    const sl::Opinion& aspect(Aspect a) const;
};

/// Builds the reference set for a sensor. The gate with coverage gate_prob is
/// folded in: a detection falling outside the gate is a miss by construction,
/// so the miss event carries rho0 + (1 - rho0)(1 - gate_prob) and the top
/// statistic bin is truncated at the gate, where rho0 is the
/// miss_mixture_weight of the sensor's detection and clutter parameters.
ReferenceSet build_references(const tracking::SensorModel& sensor, int num_bins,
                              double gate_prob);

} // namespace satrack::assess
