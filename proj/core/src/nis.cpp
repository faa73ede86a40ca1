#include "satrack/assess/nis.hpp"

#include <numeric>
#include <stdexcept>

#include "satrack/stats.hpp"

namespace satrack::assess {

NisTracker::NisTracker(int window) : window_(window) {
    if (window < 1) throw std::invalid_argument("NisTracker: window must be >= 1");
}

void NisTracker::push(double statistic) {
    values_.push_back(statistic);
    if (static_cast<int>(values_.size()) > window_) values_.pop_front();
}

std::optional<NisTracker::Summary> NisTracker::summary() const {
    if (values_.empty()) return std::nullopt;
    Summary s;
    s.count = static_cast<int>(values_.size());
    s.avg = std::accumulate(values_.begin(), values_.end(), 0.0) / s.count;
    confidence_interval(s.count, s.ci_lo, s.ci_hi);
    return s;
}

void NisTracker::confidence_interval(int pooled_count, double& lo, double& hi) {
    if (pooled_count < 1)
        throw std::invalid_argument("NisTracker: pooled count must be >= 1");
    // The interval is queried once per step with a count that quickly
    // saturates at the window size; memoize the last count per thread.
    thread_local int cached_count = -1;
    thread_local double cached_lo = 0.0, cached_hi = 0.0;
    if (pooled_count != cached_count) {
        const double k = pooled_count;
        cached_lo = stats::chi2_quantile(0.005, 2.0 * k) / k;
        cached_hi = stats::chi2_quantile(0.995, 2.0 * k) / k;
        cached_count = pooled_count;
    }
    lo = cached_lo;
    hi = cached_hi;
}

} // namespace satrack::assess
