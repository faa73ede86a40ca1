#include "satrack/sl/opinion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace satrack::sl {

namespace {

constexpr double kAdditivityTol = 1e-9;
constexpr double kNegativeTol = 1e-12;

void check_base_rate(const Eigen::VectorXd& a) {
    if (a.size() < 2)
        throw std::invalid_argument("Opinion: domain cardinality must be >= 2");
    if ((a.array() < -kNegativeTol).any())
        throw std::invalid_argument("Opinion: base rate must be non-negative");
    if (std::abs(a.sum() - 1.0) > kAdditivityTol)
        throw std::invalid_argument("Opinion: base rate must sum to 1");
}

// Snap sum(b) + u to exactly 1 by rescaling; inputs are already within
// kAdditivityTol so this is a last-digit correction, not a repair.
void renormalize(Eigen::VectorXd& b, double& u) {
    b = b.cwiseMax(0.0);
    u = std::min(std::max(u, 0.0), 1.0);
    const double s = b.sum() + u;
    b /= s;
    u /= s;
}

} // namespace

Opinion::Opinion(Eigen::VectorXd belief, double uncertainty, Eigen::VectorXd base_rate)
    : belief_(std::move(belief)), uncertainty_(uncertainty), base_rate_(std::move(base_rate)) {
    check_base_rate(base_rate_);
    if (belief_.size() != base_rate_.size())
        throw std::invalid_argument("Opinion: belief and base rate sizes differ");
    if ((belief_.array() < -kNegativeTol).any())
        throw std::invalid_argument("Opinion: belief must be non-negative");
    if (uncertainty_ < -kNegativeTol || uncertainty_ > 1.0 + kAdditivityTol)
        throw std::invalid_argument("Opinion: uncertainty must lie in [0, 1]");
    if (std::abs(belief_.sum() + uncertainty_ - 1.0) > kAdditivityTol)
        throw std::invalid_argument("Opinion: belief mass plus uncertainty must sum to 1");
    renormalize(belief_, uncertainty_);
    base_rate_ = base_rate_.cwiseMax(0.0);
    base_rate_ /= base_rate_.sum();
}

Opinion Opinion::vacuous(Eigen::VectorXd base_rate) {
    Eigen::VectorXd b = Eigen::VectorXd::Zero(base_rate.size());
    return Opinion(std::move(b), 1.0, std::move(base_rate));
}

Opinion Opinion::from_evidence(const Eigen::VectorXd& counts,
                               const Eigen::VectorXd& base_rate,
                               double prior_weight) {
    if (!(prior_weight > 0.0))
        throw std::invalid_argument("from_evidence: prior weight must be > 0");
    if ((counts.array() < 0.0).any())
        throw std::invalid_argument("from_evidence: counts must be non-negative");
    const double total = prior_weight + counts.sum();
    return Opinion(counts / total, prior_weight / total, base_rate);
}

Eigen::VectorXd Opinion::projection() const {
    return belief_ + base_rate_ * uncertainty_;
}

Eigen::VectorXd Opinion::to_evidence(double prior_weight) const {
    if (!(prior_weight > 0.0))
        throw std::invalid_argument("to_evidence: prior weight must be > 0");
    if (uncertainty_ <= 0.0)
        throw std::domain_error("to_evidence: dogmatic opinion has unbounded counts");
    return prior_weight * belief_ / uncertainty_;
}

double Opinion::evidence_total(double prior_weight) const {
    if (!(prior_weight > 0.0))
        throw std::invalid_argument("evidence_total: prior weight must be > 0");
    if (uncertainty_ <= 0.0) return std::numeric_limits<double>::infinity();
    return prior_weight * (1.0 - uncertainty_) / uncertainty_;
}

Opinion fuse_cumulative(const Opinion& a, const Opinion& b) {
    if (a.cardinality() != b.cardinality())
        throw std::invalid_argument("fuse_cumulative: domain cardinality mismatch");
    const double ua = a.uncertainty(), ub = b.uncertainty();

    if (ua == 0.0 && ub == 0.0) {
        return Opinion(0.5 * (a.belief() + b.belief()), 0.0,
                       0.5 * (a.base_rate() + b.base_rate()));
    }

    const double den = ub + ua * (1.0 - ub); // = ua + ub - ua*ub, no cancellation
    Eigen::VectorXd bf = (a.belief() * ub + b.belief() * ua) / den;
    const double uf = ua * ub / den;

    // Base rates mix with weights u_B(1-u_A) and u_A(1-u_B). Dividing by the
    // computed weight sum (rather than the algebraically equal
    // ua + ub - 2*ua*ub) keeps the result an exact convex combination even
    // when both operands are within an ulp of vacuous. Both weights vanish
    // only at (0,0), handled above, and (1,1), the two-vacuous case.
    const double wa = ub * (1.0 - ua);
    const double wb = ua * (1.0 - ub);
    Eigen::VectorXd af;
    if (wa + wb <= 0.0) {
        af = 0.5 * (a.base_rate() + b.base_rate());
    } else {
        af = (a.base_rate() * wa + b.base_rate() * wb) / (wa + wb);
    }
    return Opinion(std::move(bf), uf, std::move(af));
}

Opinion unfuse_cumulative(const Opinion& fused, const Opinion& removed,
                          const Eigen::VectorXd& base_rate) {
    if (fused.cardinality() != removed.cardinality())
        throw std::invalid_argument("unfuse_cumulative: domain cardinality mismatch");
    const double uc = fused.uncertainty(), ub = removed.uncertainty();
    const double den = ub - uc + ub * uc;
    if (den <= 1e-12)
        throw std::domain_error("unfuse_cumulative: degenerate decomposition");

    Eigen::VectorXd bv = (fused.belief() * ub - removed.belief() * uc) / den;
    double uv = ub * uc / den;
    if ((bv.array() < -kNegativeTol).any())
        throw std::domain_error("unfuse_cumulative: negative belief mass, operands are not a fusion pair");
    if (uv < -kNegativeTol || uv > 1.0 + kNegativeTol)
        throw std::domain_error("unfuse_cumulative: uncertainty outside [0, 1]");

    // Tiny negatives from cancellation are clamped; rescale so the masses
    // sum to 1 again.
    bv = bv.cwiseMax(0.0);
    uv = std::min(std::max(uv, 0.0), 1.0);
    const double s = bv.sum() + uv;
    return Opinion(bv / s, uv / s, base_rate);
}

Opinion trust_discount(const Opinion& o, double trust) {
    if (!(trust >= 0.0 && trust <= 1.0))
        throw std::invalid_argument("trust_discount: trust must lie in [0, 1]");
    Eigen::VectorXd b = trust * o.belief();
    const double u = 1.0 - b.sum();
    return Opinion(std::move(b), u, o.base_rate());
}

double degree_of_conflict(const Opinion& a, const Opinion& b) {
    if (a.cardinality() != b.cardinality())
        throw std::invalid_argument("degree_of_conflict: domain cardinality mismatch");
    const double pd = 0.5 * (a.projection() - b.projection()).cwiseAbs().sum();
    const double cc = (1.0 - a.uncertainty()) * (1.0 - b.uncertainty());
    return pd * cc;
}

} // namespace satrack::sl
