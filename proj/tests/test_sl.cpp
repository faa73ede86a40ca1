#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "satrack/sim/rng.hpp"
#include "satrack/sl/opinion.hpp"
#include "satrack/sl/threshold.hpp"

using namespace satrack;
using sl::Opinion;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double e : v) x(i++) = e;
    return x;
}

Eigen::VectorXd uniform_base(Eigen::Index w) {
    return Eigen::VectorXd::Constant(w, 1.0 / static_cast<double>(w));
}

// Random opinion with strictly positive uncertainty.
Opinion random_opinion(sim::Rng& rng, Eigen::Index w) {
    Eigen::VectorXd m(w + 1);
    for (Eigen::Index i = 0; i <= w; ++i) m(i) = rng.uniform() + 1e-3;
    m /= m.sum();
    Eigen::VectorXd a(w);
    for (Eigen::Index i = 0; i < w; ++i) a(i) = rng.uniform() + 1e-3;
    a /= a.sum();
    return Opinion(m.head(w), m(w), a);
}

} // namespace

TEST_CASE("construction validates and maintains additivity") {
    const Opinion o(vec({0.6, 0.2}), 0.2, vec({0.5, 0.5}));
    CHECK(o.belief().sum() + o.uncertainty() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(o.base_rate().sum() == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(Opinion(vec({0.6, 0.2}), 0.3, vec({0.5, 0.5})),
                    std::invalid_argument); // masses sum to 1.1
    CHECK_THROWS_AS(Opinion(vec({-0.1, 0.9}), 0.2, vec({0.5, 0.5})),
                    std::invalid_argument);
    CHECK_THROWS_AS(Opinion(vec({0.6, 0.2}), 0.2, vec({0.7, 0.7})),
                    std::invalid_argument); // base rate sums to 1.4
    CHECK_THROWS_AS(Opinion(vec({1.0}), 0.0, vec({1.0})), std::invalid_argument);
}

TEST_CASE("projection adds the base-rate share of the uncertainty") {
    const Opinion o(vec({0.0, 0.5}), 0.5, vec({0.5, 0.5}));
    CHECK(o.projection()(0) == doctest::Approx(0.25));
    CHECK(o.projection()(1) == doctest::Approx(0.75));
    const Opinion v = Opinion::vacuous(vec({0.3, 0.7}));
    CHECK(v.projection()(0) == doctest::Approx(0.3));
    CHECK(v.projection()(1) == doctest::Approx(0.7));
}

TEST_CASE("evidence mapping round-trips and misses count as prior-only mass") {
    const auto a = uniform_base(2);
    const Opinion o = Opinion::from_evidence(vec({0.0, 1.0}), a, 2.0);
    CHECK(o.belief()(0) == doctest::Approx(0.0));
    CHECK(o.belief()(1) == doctest::Approx(1.0 / 3.0));
    CHECK(o.uncertainty() == doctest::Approx(2.0 / 3.0));
    CHECK(o.evidence_total(2.0) == doctest::Approx(1.0));

    const Eigen::VectorXd r = o.to_evidence(2.0);
    CHECK(r(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r(1) == doctest::Approx(1.0).epsilon(1e-12));

    const Opinion dogmatic(vec({0.4, 0.6}), 0.0, a);
    CHECK_THROWS_AS(dogmatic.to_evidence(2.0), std::domain_error);
    CHECK(std::isinf(dogmatic.evidence_total(2.0)));
}

TEST_CASE("fusion pools evidence: worked pair") {
    const auto a = uniform_base(2);
    const Opinion f = sl::fuse_cumulative(Opinion::from_evidence(vec({3, 1}), a, 2.0),
                                          Opinion::from_evidence(vec({1, 2}), a, 2.0));
    CHECK(f.belief()(0) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    CHECK(f.belief()(1) == doctest::Approx(3.0 / 9.0).epsilon(1e-12));
    CHECK(f.uncertainty() == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("fusion corner cases") {
    const auto a = uniform_base(2);
    const Opinion dog1(vec({1.0, 0.0}), 0.0, vec({0.2, 0.8}));
    const Opinion dog2(vec({0.0, 1.0}), 0.0, vec({0.6, 0.4}));
    const Opinion vac1 = Opinion::vacuous(vec({0.2, 0.8}));
    const Opinion vac2 = Opinion::vacuous(vec({0.6, 0.4}));
    const Opinion gen = Opinion::from_evidence(vec({2, 1}), a, 2.0);

    SUBCASE("two dogmatic operands average beliefs and base rates") {
        const Opinion f = sl::fuse_cumulative(dog1, dog2);
        CHECK(f.belief()(0) == doctest::Approx(0.5));
        CHECK(f.uncertainty() == doctest::Approx(0.0));
        CHECK(f.base_rate()(0) == doctest::Approx(0.4));
    }
    SUBCASE("a single dogmatic operand absorbs") {
        const Opinion f = sl::fuse_cumulative(gen, dog1);
        CHECK(f.belief()(0) == doctest::Approx(1.0));
        CHECK(f.uncertainty() == doctest::Approx(0.0));
        CHECK(f.base_rate()(0) == doctest::Approx(0.2));
    }
    SUBCASE("two vacuous operands stay vacuous with averaged base rates") {
        const Opinion f = sl::fuse_cumulative(vac1, vac2);
        CHECK(f.uncertainty() == doctest::Approx(1.0));
        CHECK(f.base_rate()(0) == doctest::Approx(0.4));
    }
    SUBCASE("a vacuous operand is neutral") {
        const Opinion f = sl::fuse_cumulative(gen, Opinion::vacuous(a));
        CHECK(f.belief()(0) == doctest::Approx(gen.belief()(0)).epsilon(1e-14));
        CHECK(f.uncertainty() == doctest::Approx(gen.uncertainty()).epsilon(1e-14));
        CHECK(f.base_rate()(0) == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("unfusion inverts fusion and rejects impossible decompositions") {
    const auto a = uniform_base(2);
    const Opinion opA = Opinion::from_evidence(vec({3, 1}), a, 2.0);
    const Opinion opB = Opinion::from_evidence(vec({1, 2}), a, 2.0);
    const Opinion fused = sl::fuse_cumulative(opA, opB);

    const Opinion back = sl::unfuse_cumulative(fused, opB, a);
    CHECK(back.belief()(0) == doctest::Approx(opA.belief()(0)).epsilon(1e-12));
    CHECK(back.belief()(1) == doctest::Approx(opA.belief()(1)).epsilon(1e-12));
    CHECK(back.uncertainty() == doctest::Approx(opA.uncertainty()).epsilon(1e-12));

    SUBCASE("removing more evidence than present fails") {
        const Opinion small = Opinion::from_evidence(vec({1, 0}), a, 2.0);
        const Opinion big = Opinion::from_evidence(vec({2, 0}), a, 2.0);
        CHECK_THROWS_AS(sl::unfuse_cumulative(small, big, a), std::domain_error);
    }
    SUBCASE("removing a dogmatic operand is degenerate") {
        const Opinion dog(vec({1.0, 0.0}), 0.0, a);
        CHECK_THROWS_AS(sl::unfuse_cumulative(fused, dog, a), std::domain_error);
    }
    SUBCASE("unfusing a vacuous operand is the identity") {
        const Opinion same = sl::unfuse_cumulative(fused, Opinion::vacuous(a), a);
        CHECK(same.belief()(0) == doctest::Approx(fused.belief()(0)).epsilon(1e-14));
        CHECK(same.uncertainty() == doctest::Approx(fused.uncertainty()).epsilon(1e-14));
    }
}

TEST_CASE("trust discounting: worked example and closure") {
    const Opinion o(vec({0.6, 0.2}), 0.2, vec({0.5, 0.5}));
    const Opinion d = sl::trust_discount(o, 0.9);
    CHECK(d.belief()(0) == doctest::Approx(0.54).epsilon(1e-14));
    CHECK(d.belief()(1) == doctest::Approx(0.18).epsilon(1e-14));
    CHECK(d.uncertainty() == doctest::Approx(0.28).epsilon(1e-14));
    CHECK(d.base_rate()(0) == doctest::Approx(0.5));

    CHECK(sl::trust_discount(o, 1.0).uncertainty() == doctest::Approx(0.2));
    CHECK(sl::trust_discount(o, 0.0).uncertainty() == doctest::Approx(1.0));
    CHECK_THROWS_AS(sl::trust_discount(o, 1.5), std::invalid_argument);
}

TEST_CASE("degree of conflict: worked example, bounds, vacuous neutrality") {
    const Opinion dog(vec({1.0, 0.0}), 0.0, vec({0.5, 0.5}));
    const Opinion half(vec({0.0, 0.5}), 0.5, vec({0.5, 0.5}));
    CHECK(sl::degree_of_conflict(dog, half) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(sl::degree_of_conflict(half, dog) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(sl::degree_of_conflict(dog, Opinion::vacuous(vec({0.5, 0.5}))) ==
          doctest::Approx(0.0));
    const Opinion opposite(vec({0.0, 1.0}), 0.0, vec({0.5, 0.5}));
    CHECK(sl::degree_of_conflict(dog, opposite) == doctest::Approx(1.0));
}

TEST_CASE("random-pair properties: commutativity, homomorphism, inversion, bounds") {
    sim::Rng rng(0xfeedbeefULL);
    const Eigen::Index cards[] = {2, 3, 5, 7};
    for (int it = 0; it < 2000; ++it) {
        const Eigen::Index w = cards[it % 4];
        const auto base = uniform_base(w);
        const double prior = static_cast<double>(w);

        Eigen::VectorXd ra(w), rb(w);
        for (Eigen::Index i = 0; i < w; ++i) {
            ra(i) = std::floor(rng.uniform() * 20.0);
            rb(i) = std::floor(rng.uniform() * 20.0);
        }
        const Opinion oa = Opinion::from_evidence(ra, base, prior);
        const Opinion ob = Opinion::from_evidence(rb, base, prior);

        const Opinion fab = sl::fuse_cumulative(oa, ob);
        const Opinion fba = sl::fuse_cumulative(ob, oa);
        CHECK((fab.belief() - fba.belief()).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(fab.uncertainty() - fba.uncertainty()) < 1e-9);

        const Opinion direct = Opinion::from_evidence(ra + rb, base, prior);
        CHECK((fab.belief() - direct.belief()).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(fab.uncertainty() - direct.uncertainty()) < 1e-9);

        const Opinion back = sl::unfuse_cumulative(fab, ob, base);
        CHECK((back.belief() - oa.belief()).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(back.uncertainty() - oa.uncertainty()) < 1e-9);

        const Opinion ga = random_opinion(rng, w);
        const Opinion gb = random_opinion(rng, w);
        const double dc = sl::degree_of_conflict(ga, gb);
        CHECK(dc >= 0.0);
        CHECK(dc <= 1.0);
        CHECK(std::abs(ga.projection().sum() - 1.0) < 1e-9);
        const Opinion fused = sl::fuse_cumulative(ga, gb);
        CHECK(std::abs(fused.belief().sum() + fused.uncertainty() - 1.0) < 1e-9);
        CHECK(std::abs(fused.base_rate().sum() - 1.0) < 1e-9);
    }
}

TEST_CASE("conflict threshold: frozen oracle value and parameter behavior") {
    CHECK(sl::dc_threshold({0.99, 2, 100.0}) ==
          doctest::Approx(oracle::frozen::kThreshold_99_2_100).epsilon(1e-9));

    // Same quantity assembled from the erfc-based oracle.
    const double z = oracle::normal_quantile(1.0 - 0.01 / 4.0);
    const double d = z * std::sqrt(1.0 / (4.0 * 100.0));
    CHECK(sl::dc_threshold({0.99, 2, 100.0}) ==
          doctest::Approx(d * (1.0 - 2.0 / 102.0)).epsilon(1e-12));

    // Decreases in the evidence count once past the cardinality...
    double prev = sl::dc_threshold({0.99, 2, 10.0});
    for (double n : {20.0, 50.0, 100.0, 1000.0, 10000.0}) {
        const double cur = sl::dc_threshold({0.99, 2, n});
        CHECK(cur < prev);
        prev = cur;
    }
    // ...and peaks exactly at n_s == cardinality.
    const double peak = sl::dc_threshold({0.99, 3, 3.0});
    CHECK(sl::dc_threshold({0.99, 3, 2.5}) < peak);
    CHECK(sl::dc_threshold({0.99, 3, 3.5}) < peak);

    // Wider domains and higher confidence raise the bar.
    CHECK(sl::dc_threshold({0.99, 3, 100.0}) > sl::dc_threshold({0.99, 2, 100.0}));
    CHECK(sl::dc_threshold({0.999, 2, 100.0}) > sl::dc_threshold({0.99, 2, 100.0}));

    CHECK_THROWS_AS(sl::dc_threshold({0.0, 2, 100.0}), std::invalid_argument);
    CHECK_THROWS_AS(sl::dc_threshold({0.99, 1, 100.0}), std::invalid_argument);
    CHECK_THROWS_AS(sl::dc_threshold({0.99, 2, 0.0}), std::invalid_argument);
}
