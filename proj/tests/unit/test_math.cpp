#include "doctest.h"

#include <cmath>
#include <vector>

#include "aircov/math.hpp"

using namespace aircov;

TEST_CASE("q function anchors and symmetry") {
    CHECK(q_function(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // z such that the upper tail is exactly 10%
    CHECK(q_function(1.2815515655446004) == doctest::Approx(0.1).epsilon(1e-12));
    for (double z : {-3.0, -1.0, -0.25, 0.5, 2.0, 4.0}) {
        CHECK(q_function(z) + q_function(-z) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(normal_cdf(z) + q_function(z) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // strictly decreasing
    double prev = q_function(-6.0);
    for (double z = -5.5; z <= 6.0; z += 0.5) {
        const double cur = q_function(z);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("inverse normal round-trips through the cdf") {
    CHECK(normal_inv(0.5) == 0.0);
    for (double p : {1e-9, 1e-4, 0.025, 0.1, 0.3, 0.5, 0.7, 0.975, 0.9999}) {
        const double z = normal_inv(p);
        CHECK(normal_cdf(z) == doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(normal_inv(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
    CHECK(normal_inv(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-14));
}

TEST_CASE("regularized upper gamma identities") {
    // a = 1/2 reduces to the Gaussian tail, a = 1 to the exponential tail
    for (double z : {0.5, 1.0, 2.0, 3.0}) {
        CHECK(gamma_q(0.5, z * z / 2.0) ==
              doctest::Approx(2.0 * q_function(z)).epsilon(1e-12));
    }
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
        CHECK(gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
    }
    CHECK(gamma_q(3.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // decreasing in x
    CHECK(gamma_q(2.5, 1.0) > gamma_q(2.5, 2.0));
    CHECK(gamma_q(2.5, 2.0) > gamma_q(2.5, 4.0));
}

TEST_CASE("chi-square p-value special cases") {
    for (double x : {0.5, 2.0, 7.0})
        CHECK(chi2_pvalue(x, 2.0) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
    CHECK(chi2_pvalue(0.0, 5.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("wilson interval brackets the point estimate") {
    const auto w = wilson_score(58034, 100000);
    CHECK(w.p_hat == doctest::Approx(0.58034).epsilon(1e-15));
    CHECK(w.low == doctest::Approx(0.5772782622864095).epsilon(1e-12));
    CHECK(w.high == doctest::Approx(0.5833955654946607).epsilon(1e-12));
    CHECK(w.low < w.p_hat);
    CHECK(w.p_hat < w.high);

    const auto zero = wilson_score(0, 1000);
    CHECK(zero.low == 0.0);
    CHECK(zero.high > 0.0);
    const auto all = wilson_score(1000, 1000);
    CHECK(all.high <= 1.0);
    CHECK(all.low < 1.0);
}

TEST_CASE("pairwise block sum matches serial addition") {
    std::vector<double> v;
    double serial = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        v.push_back(static_cast<double>(i));
        serial += static_cast<double>(i);
    }
    CHECK(block_pairwise_sum(v) == serial); // integers: both exact

    CHECK(block_pairwise_sum({}) == 0.0);
    CHECK(block_pairwise_sum({3.5}) == 3.5);
    CHECK(block_pairwise_sum({1.0, 2.0, 3.0, 4.0}) == ((1.0 + 2.0) + (3.0 + 4.0)));
    CHECK(block_pairwise_sum({1.0, 2.0, 3.0}) == ((1.0 + 2.0) + 3.0));
}

TEST_CASE("degree radian conversions") {
    CHECK(deg2rad(180.0) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(rad2deg(pi / 2.0) == doctest::Approx(90.0).epsilon(1e-15));
    CHECK(rad2deg(deg2rad(37.25)) == doctest::Approx(37.25).epsilon(1e-15));
}
