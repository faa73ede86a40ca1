#pragma once

#include <ostream>

#include "satrack/sim/runner.hpp"

namespace satrack::sim {

/// Writes the averaged traces as long-format CSV with header
/// `step,sensor,metric,value`. Steps are 0-based; sensor 0 carries the
/// track-level metrics (err_m), sensors 1..N their monitor and NIS metrics
/// in lexicographic metric order. Values are rendered with "%.6g", so the
/// bytes are a pure function of the numbers.
void write_csv(std::ostream& out, const MonteCarloResult& mc);

} // namespace satrack::sim
