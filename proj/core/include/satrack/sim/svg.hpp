#pragma once

#include <ostream>

#include "satrack/sim/runner.hpp"

namespace satrack::sim {

/// Renders one sensor's averaged traces as a standalone SVG: one panel per
/// aspect (conflict score against its threshold) plus a NIS panel with the
/// confidence band, with the sensor's disturbance windows shaded.
/// `sensor` is 1-based.
void write_svg(std::ostream& out, const MonteCarloResult& mc,
               const ScenarioConfig& cfg, int sensor);

} // namespace satrack::sim
