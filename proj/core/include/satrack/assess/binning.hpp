#pragma once

#include <array>
#include <vector>

namespace satrack::assess {

/// Discretization of the monitored quantities into categorical outcomes:
/// the gated chi-squared statistic into num_bins equiprobable bins (2 dof),
/// and the per-scan clutter count into low / mid / high, where mid is the
/// smallest contiguous count interval holding at least half the Poisson mass,
/// grown greedily from the mode (ties prefer the lower count).
class AspectBinning {
public:
    static AspectBinning make(int num_bins, double clutter_mean);

    int num_bins() const { return num_bins_; }
    const std::vector<double>& chi2_edges() const { return chi2_edges_; }
    int clutter_mid_lo() const { return mid_lo_; }
    int clutter_mid_hi() const { return mid_hi_; }
    const std::array<double, 3>& clutter_masses() const { return masses_; }

    /// Bin index 0..num_bins-1 for a gated statistic (values past the last
    /// edge land in the top bin; the gate caps them anyway).
    int chi2_bin(double statistic) const;

    /// 0 = low, 1 = mid, 2 = high for an estimated clutter count.
    int clutter_bin(int count) const;

private:
    int num_bins_ = 0;
    std::vector<double> chi2_edges_;
    int mid_lo_ = 0, mid_hi_ = 0;
    std::array<double, 3> masses_{};
};

} // namespace satrack::assess
