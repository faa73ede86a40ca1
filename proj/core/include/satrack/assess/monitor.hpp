#pragma once

#include <array>
#include <deque>
#include <optional>

#include "satrack/assess/references.hpp"
#include "satrack/sl/opinion.hpp"
#include "satrack/tracking/association.hpp"

namespace satrack::assess {

/// Tuning knobs of the online monitor.
struct MonitorParams {
    double alpha = 0.99;       ///< confidence level of the conflict threshold
    double trust_decay = 0.995; ///< per-step trust factor of the long-term opinion
    int short_window = 50;      ///< FIFO length of the short-term opinion, >= 1
};

/// What one scan contributed, already reduced to categorical facts.
struct StepObservation {
    bool miss = true;                         ///< nothing associated this scan
    double statistic = 0.0;                   ///< gated statistic when !miss
    int clutter_count = 0;                    ///< scan size minus the association
};

/// Reduces an association outcome to a step observation.
StepObservation observe_from(const tracking::Association& assoc, int scan_size);

/// Per-aspect monitor output for one step.
struct AspectOutput {
    double dc_score = 0.0;      ///< conflict between long-term opinion and reference
    double threshold = 0.0;     ///< decision threshold at the long-term evidence
    double uncertainty = 1.0;   ///< long-term opinion uncertainty mass
    double evidence = 0.0;      ///< long-term effective evidence count
    bool flag = false;          ///< dc_score above threshold after warm-up
};

struct MonitorOutput {
    std::array<AspectOutput, kNumAspects> aspects;
    std::optional<double> statistic; ///< the gated statistic fed in, if any
};

/// Online self-assessment of a single sensor against its reference set.
///
/// Each aspect keeps a short-term opinion (sliding FIFO of the last
/// short_window step opinions, maintained by fusion and unfusion) and a
/// long-term opinion (trust-discounted fusion of all steps). Once the FIFO
/// has filled, a step whose short- and long-term opinions conflict beyond
/// the threshold resets the long-term opinion to the short-term one, so the
/// monitor re-converges quickly after a change instead of averaging it away.
class SensorMonitor {
public:
    SensorMonitor(ReferenceSet refs, MonitorParams params);

    MonitorOutput step(const StepObservation& obs);

    const ReferenceSet& references() const { return refs_; }
    const MonitorParams& params() const { return params_; }

private:
    struct AspectState {
        sl::Opinion short_term;
        sl::Opinion long_term;
        std::deque<sl::Opinion> window;
    };

    sl::Opinion step_opinion(Aspect a, const StepObservation& obs) const;
    AspectOutput advance(AspectState& st, const sl::Opinion& step_op,
                         const sl::Opinion& ref) const;

    ReferenceSet refs_;
    MonitorParams params_;
    std::array<AspectState, kNumAspects> state_;
};

} // namespace satrack::assess
