#include "satrack/assess/binning.hpp"

#include <algorithm>
#include <stdexcept>

#include "satrack/stats.hpp"

namespace satrack::assess {

AspectBinning AspectBinning::make(int num_bins, double clutter_mean) {
    if (num_bins < 2)
        throw std::invalid_argument("AspectBinning: need at least 2 bins");
    if (!(clutter_mean > 0.0))
        throw std::invalid_argument("AspectBinning: clutter_mean must be > 0");

    AspectBinning out;
    out.num_bins_ = num_bins;
    out.chi2_edges_.reserve(static_cast<std::size_t>(num_bins) - 1);
    for (int i = 1; i < num_bins; ++i)
        out.chi2_edges_.push_back(
            stats::chi2_quantile(static_cast<double>(i) / num_bins, 2.0));

    // Grow the mid interval from the mode until it holds half the mass.
    int lo = static_cast<int>(clutter_mean); // floor, mode of the pmf
    int hi = lo;
    double mass = stats::poisson_pmf(static_cast<unsigned>(lo), clutter_mean);
    while (mass < 0.5) {
        const double left =
            lo > 0 ? stats::poisson_pmf(static_cast<unsigned>(lo - 1), clutter_mean) : -1.0;
        const double right = stats::poisson_pmf(static_cast<unsigned>(hi + 1), clutter_mean);
        if (right > left) {
            ++hi;
            mass += right;
        } else {
            --lo;
            mass += left;
        }
    }
    out.mid_lo_ = lo;
    out.mid_hi_ = hi;

    double p_low = 0.0;
    for (int k = 0; k < lo; ++k)
        p_low += stats::poisson_pmf(static_cast<unsigned>(k), clutter_mean);
    out.masses_ = {p_low, mass, std::max(0.0, 1.0 - p_low - mass)};
    if (lo == 0)
        throw std::invalid_argument(
            "AspectBinning: clutter_mean too small, the low-count bin is empty");
    return out;
}

int AspectBinning::chi2_bin(double statistic) const {
    const auto it =
        std::upper_bound(chi2_edges_.begin(), chi2_edges_.end(), statistic);
    return static_cast<int>(it - chi2_edges_.begin());
}

int AspectBinning::clutter_bin(int count) const {
    if (count < mid_lo_) return 0;
    if (count > mid_hi_) return 2;
    return 1;
}

} // namespace satrack::assess
