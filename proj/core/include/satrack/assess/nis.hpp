#pragma once

#include <deque>
#include <optional>

namespace satrack::assess {

/// Sliding time-average of the normalized innovation squared, the classical
/// chi-squared filter-consistency statistic, with a two-sided 99% confidence
/// interval for the average of K samples: [q(0.005, 2K), q(0.995, 2K)] / K.
class NisTracker {
public:
    explicit NisTracker(int window);

    /// Records the statistic of an associated measurement (misses contribute
    /// nothing; the window keeps the last `window` available values).
    void push(double statistic);

    struct Summary {
        double avg = 0.0;
        double ci_lo = 0.0;
        double ci_hi = 0.0;
        int count = 0; ///< samples in the window, K <= window
    };

    /// Nullopt until at least one statistic has been recorded.
    std::optional<Summary> summary() const;

    /// The 99% CI for an average of `pooled_count` two-dof samples; used to
    /// re-baseline Monte-Carlo-averaged traces on the pooled sample count.
    static void confidence_interval(int pooled_count, double& lo, double& hi);

private:
    int window_;
    std::deque<double> values_;
};

} // namespace satrack::assess
