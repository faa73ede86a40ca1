#include "satrack/assess/monitor.hpp"

#include <cmath>
#include <stdexcept>

#include "satrack/sl/threshold.hpp"

namespace satrack::assess {

StepObservation observe_from(const tracking::Association& assoc, int scan_size) {
    StepObservation obs;
    obs.miss = assoc.assoc_index == 0;
    obs.statistic = obs.miss ? 0.0 : assoc.statistic;
    obs.clutter_count = scan_size - (obs.miss ? 0 : 1);
    if (obs.clutter_count < 0)
        throw std::invalid_argument("observe_from: scan_size smaller than association");
    return obs;
}

SensorMonitor::SensorMonitor(ReferenceSet refs, MonitorParams params)
    : refs_(std::move(refs)),
      params_(params),
      state_{AspectState{sl::Opinion::vacuous(refs_.overall.base_rate()),
                         sl::Opinion::vacuous(refs_.overall.base_rate()),
                         {}},
             AspectState{sl::Opinion::vacuous(refs_.association.base_rate()),
                         sl::Opinion::vacuous(refs_.association.base_rate()),
                         {}},
             AspectState{sl::Opinion::vacuous(refs_.measurement.base_rate()),
                         sl::Opinion::vacuous(refs_.measurement.base_rate()),
                         {}},
             AspectState{sl::Opinion::vacuous(refs_.clutter.base_rate()),
                         sl::Opinion::vacuous(refs_.clutter.base_rate()),
                         {}}} {
    if (!(params_.alpha > 0.0 && params_.alpha < 1.0))
        throw std::invalid_argument("SensorMonitor: alpha must lie in (0, 1)");
    if (!(params_.trust_decay >= 0.0 && params_.trust_decay <= 1.0))
        throw std::invalid_argument("SensorMonitor: trust_decay must lie in [0, 1]");
    if (params_.short_window < 1)
        throw std::invalid_argument("SensorMonitor: short_window must be >= 1");
}

sl::Opinion SensorMonitor::step_opinion(Aspect a, const StepObservation& obs) const {
    const sl::Opinion& ref = refs_.aspect(a);
    const auto w = ref.cardinality();
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(w);
    switch (a) {
        case Aspect::overall:
            counts(obs.miss ? 0 : 1 + refs_.binning.chi2_bin(obs.statistic)) = 1.0;
            break;
        case Aspect::association:
            counts(obs.miss ? 1 : 0) = 1.0;
            break;
        case Aspect::measurement:
            if (obs.miss) return sl::Opinion::vacuous(ref.base_rate());
            counts(refs_.binning.chi2_bin(obs.statistic)) = 1.0;
            break;
        case Aspect::clutter:
            counts(refs_.binning.clutter_bin(obs.clutter_count)) = 1.0;
            break;
    }
    return sl::Opinion::from_evidence(counts, ref.base_rate(),
                                      static_cast<double>(w));
}

AspectOutput SensorMonitor::advance(AspectState& st, const sl::Opinion& step_op,
                                    const sl::Opinion& ref) const {
    const double w = static_cast<double>(ref.cardinality());

    st.short_term = sl::fuse_cumulative(st.short_term, step_op);
    st.window.push_back(step_op);
    if (static_cast<int>(st.window.size()) > params_.short_window) {
        const sl::Opinion oldest = st.window.front();
        st.window.pop_front();
        try {
            st.short_term =
                sl::unfuse_cumulative(st.short_term, oldest, ref.base_rate());
        } catch (const std::domain_error&) {
            // Accumulated rounding can leave the pair undecomposable; the
            // window contents are authoritative, so refuse from scratch.
            sl::Opinion rebuilt = sl::Opinion::vacuous(ref.base_rate());
            for (const auto& op : st.window) rebuilt = sl::fuse_cumulative(rebuilt, op);
            st.short_term = rebuilt;
        }
    }

    st.long_term = sl::fuse_cumulative(
        sl::trust_discount(st.long_term, params_.trust_decay), step_op);

    const double ev_short = st.short_term.evidence_total(w);
    if (static_cast<int>(st.window.size()) == params_.short_window && ev_short > 0.0 &&
        std::isfinite(ev_short)) {
        const double dc_change = sl::degree_of_conflict(st.short_term, st.long_term);
        const double reset_thr =
            sl::dc_threshold({params_.alpha, static_cast<int>(w), ev_short});
        if (dc_change > reset_thr) st.long_term = st.short_term;
    }

    AspectOutput out;
    out.dc_score = sl::degree_of_conflict(st.long_term, ref);
    out.uncertainty = st.long_term.uncertainty();
    out.evidence = st.long_term.evidence_total(w);
    if (out.evidence > 0.0 && std::isfinite(out.evidence)) {
        out.threshold = sl::dc_threshold({params_.alpha, static_cast<int>(w), out.evidence});
    } else {
        out.threshold = 0.0; // limit of the threshold at zero / unbounded evidence
    }
    out.flag = out.evidence >= static_cast<double>(params_.short_window) &&
               out.dc_score > out.threshold;
    return out;
}

MonitorOutput SensorMonitor::step(const StepObservation& obs) {
    MonitorOutput out;
    for (int i = 0; i < kNumAspects; ++i) {
        const auto a = static_cast<Aspect>(i);
        const sl::Opinion& ref = refs_.aspect(a);
        out.aspects[static_cast<std::size_t>(i)] =
            advance(state_[static_cast<std::size_t>(i)], step_opinion(a, obs), ref);
    }
    if (!obs.miss) out.statistic = obs.statistic;
    return out;
}

} // namespace satrack::assess
