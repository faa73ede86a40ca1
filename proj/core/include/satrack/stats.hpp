#pragma once

namespace satrack::stats {

/// Quantile function of the standard normal distribution.
///
/// Accurate to ~1e-15 over the full open interval (Wichura's PPND16
/// rational approximations). Throws std::domain_error for p outside (0, 1).
double inverse_normal_cdf(double p);

/// Regularized lower incomplete gamma P(s, x) for s > 0, x >= 0.
/// Series expansion for x < s + 1, Lentz continued fraction otherwise.
double regularized_lower_gamma(double s, double x);

/// CDF of the chi-squared distribution with dof degrees of freedom (dof > 0,
/// need not be integral). Zero for x <= 0.
double chi2_cdf(double x, double dof);

/// Quantile of the chi-squared distribution: the x with chi2_cdf(x, dof) = p.
/// Wilson-Hilferty initial guess refined by Newton steps with bisection
/// safeguards; round-trips through chi2_cdf to ~1e-10. Throws
/// std::domain_error for p outside (0, 1) or dof <= 0.
double chi2_quantile(double p, double dof);

/// x! extended to real x > -1, i.e. Gamma(x + 1).
double generalized_factorial(double x);

/// Poisson probability mass function, evaluated in log space so large k and
/// mean do not overflow. mean must be >= 0; mean == 0 gives the point mass
/// at k == 0.
double poisson_pmf(unsigned k, double mean);

} // namespace satrack::stats
