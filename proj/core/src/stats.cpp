#include "satrack/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace satrack::stats {

namespace {

// Wichura's algorithm AS 241, PPND16 variant. Three rational
// approximations split at |p - 0.5| <= 0.425 and r = sqrt(-log(min(p,1-p))).
double ppnd16(double p) {
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                  3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -val : val;
}

// Lower gamma by power series, valid/fast for x < s + 1.
double lower_gamma_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double a = s;
    for (int i = 0; i < 10000; ++i) {
        a += 1.0;
        term *= x / a;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Upper gamma Q(s, x) by modified Lentz continued fraction, for x >= s + 1.
double upper_gamma_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

} // namespace

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("inverse_normal_cdf: p must lie in (0, 1)");
    return ppnd16(p);
}

double regularized_lower_gamma(double s, double x) {
    if (!(s > 0.0) || x < 0.0)
        throw std::domain_error("regularized_lower_gamma: need s > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return lower_gamma_series(s, x);
    return 1.0 - upper_gamma_cf(s, x);
}

double chi2_cdf(double x, double dof) {
    if (!(dof > 0.0)) throw std::domain_error("chi2_cdf: dof must be > 0");
    if (x <= 0.0) return 0.0;
    return regularized_lower_gamma(0.5 * dof, 0.5 * x);
}

double chi2_quantile(double p, double dof) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("chi2_quantile: p must lie in (0, 1)");
    if (!(dof > 0.0)) throw std::domain_error("chi2_quantile: dof must be > 0");

    // Wilson-Hilferty cube approximation as the starting point.
    const double z = ppnd16(p);
    const double t = 1.0 - 2.0 / (9.0 * dof) + z * std::sqrt(2.0 / (9.0 * dof));
    double x = dof * t * t * t;
    if (!(x > 0.0)) x = 0.5 * dof * std::exp((std::log(p) + std::lgamma(0.5 * dof)) / (0.5 * dof));

    // Newton on F(x) - p with a bisection bracket as safety net.
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
        const double f = chi2_cdf(x, dof) - p;
        if (f > 0.0) hi = x; else lo = x;
        const double log_pdf =
            (0.5 * dof - 1.0) * std::log(x) - 0.5 * x - std::lgamma(0.5 * dof) -
            0.5 * dof * std::log(2.0);
        const double pdf = std::exp(log_pdf);
        double next = x - f / pdf;
        if (!(next > lo && (next < hi))) {
            next = std::isinf(hi) ? x * 2.0 : 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 1e-12 * (1.0 + std::abs(x))) { x = next; break; }
        x = next;
    }
    return x;
}

double generalized_factorial(double x) {
    if (!(x > -1.0))
        throw std::domain_error("generalized_factorial: x must be > -1");
    return std::tgamma(x + 1.0);
}

double poisson_pmf(unsigned k, double mean) {
    if (mean < 0.0) throw std::domain_error("poisson_pmf: mean must be >= 0");
    if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

} // namespace satrack::stats
