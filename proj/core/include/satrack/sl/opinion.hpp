#pragma once

#include <Eigen/Dense>

namespace satrack::sl {

/// Multinomial opinion over a finite domain of cardinality W >= 2: a belief
/// mass vector b, an uncertainty mass u with sum(b) + u == 1, and a base-rate
/// (prior) distribution a with sum(a) == 1.
///
/// The class validates on construction (tolerance 1e-9) and then snaps the
/// additivity constraints exactly, so long operator chains stay closed.
class Opinion {
public:
    Opinion(Eigen::VectorXd belief, double uncertainty, Eigen::VectorXd base_rate);

    /// Opinion with no committed belief: u = 1, projection equals the base rate.
    static Opinion vacuous(Eigen::VectorXd base_rate);

    /// Maps Dirichlet evidence counts r >= 0 to an opinion:
    /// b = r / (prior_weight + sum(r)), u = prior_weight / (prior_weight + sum(r)).
    static Opinion from_evidence(const Eigen::VectorXd& counts,
                                 const Eigen::VectorXd& base_rate,
                                 double prior_weight);

    const Eigen::VectorXd& belief() const { return belief_; }
    double uncertainty() const { return uncertainty_; }
    const Eigen::VectorXd& base_rate() const { return base_rate_; }
    Eigen::Index cardinality() const { return belief_.size(); }

    /// Projected probability distribution P = b + a * u.
    Eigen::VectorXd projection() const;

    /// Inverse of from_evidence: r = prior_weight * b / u.
    /// Throws std::domain_error for a dogmatic opinion (u == 0).
    Eigen::VectorXd to_evidence(double prior_weight) const;

    /// Total evidence count prior_weight * (1 - u) / u; +infinity when u == 0.
    double evidence_total(double prior_weight) const;

    bool is_dogmatic(double tol = 1e-12) const { return uncertainty_ <= tol; }
    bool is_vacuous(double tol = 1e-12) const { return uncertainty_ >= 1.0 - tol; }

private:
    Eigen::VectorXd belief_;
    double uncertainty_;
    Eigen::VectorXd base_rate_;
};

/// Aleatory cumulative belief fusion: combines two independent opinions over
/// the same domain as if pooling their underlying evidence. Commutative;
/// with a shared base rate and a shared prior weight it is exactly evidence
/// addition under the from_evidence mapping.
///
/// Corner cases: two dogmatic operands average beliefs and base rates; two
/// vacuous operands give a vacuous result with averaged base rates; a single
/// dogmatic operand absorbs; a vacuous operand is neutral.
Opinion fuse_cumulative(const Opinion& a, const Opinion& b);

/// Inverse of cumulative fusion: removes the `removed` constituent from
/// `fused`, returning the other constituent. The shared base rate of the
/// decomposition must be supplied (it is not recoverable from the operands).
///
/// Throws std::domain_error when the pair is not a valid fusion decomposition:
/// degenerate denominator, belief mass below -1e-12, or uncertainty outside
/// [0, 1]. Negative belief within the tolerance is clamped to zero and the
/// result renormalized.
Opinion unfuse_cumulative(const Opinion& fused, const Opinion& removed,
                          const Eigen::VectorXd& base_rate);

/// Trust discounting with factor p in [0, 1]: b' = p * b,
/// u' = 1 - p * sum(b), base rate unchanged. Moves belief mass to
/// uncertainty, which under the evidence mapping forgets a fraction of the
/// accumulated counts.
Opinion trust_discount(const Opinion& o, double trust);

/// Degree of conflict between two opinions on the same domain: the product
/// of the projected distance PD = 0.5 * ||P_a - P_b||_1 and the conjunctive
/// certainty CC = (1 - u_a)(1 - u_b). Always in [0, 1]; zero whenever either
/// operand is vacuous.
double degree_of_conflict(const Opinion& a, const Opinion& b);

} // namespace satrack::sl
