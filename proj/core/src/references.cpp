#include "satrack/assess/references.hpp"

#include <stdexcept>

#include "satrack/tracking/reference.hpp"

namespace satrack::assess {

const sl::Opinion& ReferenceSet::aspect(Aspect a) const {
    switch (a) {
        case Aspect::overall: return overall;
        case Aspect::association: return association;
        case Aspect::measurement: return measurement;
        case Aspect::clutter: return clutter;
    }
    throw std::logic_error("ReferenceSet::aspect: bad aspect");
}

ReferenceSet build_references(const tracking::SensorModel& sensor, int num_bins,
                              double gate_prob) {
    if (!(gate_prob > 0.0 && gate_prob < 1.0))
        throw std::invalid_argument("build_references: gate_prob must lie in (0, 1)");

    const double rho0 =
        tracking::miss_mixture_weight(sensor.detection_prob, sensor.clutter_mean);
    const AspectBinning binning = AspectBinning::make(num_bins, sensor.clutter_mean);
    const int b = num_bins;
    if (!(gate_prob > static_cast<double>(b - 1) / b))
        throw std::invalid_argument(
            "build_references: gate excludes the top statistic bin entirely");

    // The gate coverage in statistic space is exactly gate_prob (the gate is
    // the chi-squared quantile of the statistic's own nominal law).
    const double f = gate_prob;

    Eigen::VectorXd overall(b + 1);
    overall(0) = rho0 + (1.0 - rho0) * (1.0 - f);
    for (int i = 1; i <= b; ++i) {
        const double hi = (i == b) ? f : static_cast<double>(i) / b;
        const double lo = static_cast<double>(i - 1) / b;
        overall(i) = (1.0 - rho0) * (hi - lo);
    }

    Eigen::VectorXd assoc(2);
    assoc << (1.0 - rho0) * f, rho0 + (1.0 - rho0) * (1.0 - f);

    Eigen::VectorXd meas = Eigen::VectorXd::Constant(b, 1.0 / b);

    const auto& cm = binning.clutter_masses();
    Eigen::VectorXd clutter(3);
    clutter << cm[0], cm[1], cm[2];

    auto dogmatic = [](const Eigen::VectorXd& mass) {
        return sl::Opinion(mass, 0.0, mass);
    };
    return ReferenceSet{dogmatic(overall), dogmatic(assoc), dogmatic(meas),
                        dogmatic(clutter), binning};
}

} // namespace satrack::assess
