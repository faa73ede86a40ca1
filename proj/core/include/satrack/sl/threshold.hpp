#pragma once

namespace satrack::sl {

/// Inputs to the conflict decision threshold.
struct ThresholdParams {
    double alpha;       ///< confidence level in (0, 1)
    int cardinality;    ///< domain cardinality W >= 2
    double sample_size; ///< effective evidence count n_s > 0
};

/// Decision threshold for the degree of conflict between an evidence-built
/// opinion and a reference: a Bonferroni-style simultaneous bound on the
/// per-outcome deviation of a Dirichlet mean at confidence alpha, mapped
/// through the projection distance.
///
///   z   = Phi^-1(1 - (1 - alpha) / (2 W))
///   d   = z * sqrt((W - 1) / (W^2 * n_s))
///   eta = (W / 2) * d * (1 - W / (W + n_s))
///
/// eta peaks at n_s == W and decreases as evidence accumulates beyond that
/// (the certainty factor saturates while the deviation bound shrinks like
/// 1/sqrt(n_s)).
double dc_threshold(const ThresholdParams& params);

} // namespace satrack::sl
