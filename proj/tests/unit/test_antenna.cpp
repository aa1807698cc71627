#include "doctest.h"

#include <cmath>

#include "aircov/antenna.hpp"
#include "aircov/errors.hpp"
#include "../common/checks.hpp"

using namespace aircov;

TEST_CASE("boresight gain reference values") {
    CHECK(boresight_gain(55.0, 55.0) == doctest::Approx(9.816726189105).epsilon(1e-12));
    CHECK(boresight_gain(50.0, 50.0) == doctest::Approx(10.644579892269).epsilon(1e-12));
    // halving both beamwidths adds 6 dB
    CHECK(boresight_gain(25.0, 25.0) - boresight_gain(50.0, 50.0) ==
          doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("pattern validation") {
    antenna_pattern p;
    CHECK_NOTHROW(validate(p));
    p.b_phi_deg = 0.5;
    CHECK_THROWS_AS(validate(p), validation_error);
    p.b_phi_deg = 180.0;
    CHECK_THROWS_AS(validate(p), validation_error);
    p = {};
    p.lambda_phi = -0.1;
    CHECK_THROWS_AS(validate(p), validation_error);
    p = {};
    p.a_max_db = 0.0;
    CHECK_THROWS_AS(validate(p), validation_error);
}

TEST_CASE("two-axis gain peaks on boresight") {
    antenna_pattern p;
    p.tilt_deg = 10.0;
    p.theta_a_deg = -5.0;
    const double peak = (p.lambda_phi + p.lambda_theta) *
                        boresight_gain(p.b_phi_deg, p.b_theta_deg);
    CHECK(gain_3d(p, p.tilt_deg, p.theta_a_deg) == peak);
    for (double dphi = -90.0; dphi <= 90.0; dphi += 7.5) {
        for (double dtheta = -90.0; dtheta <= 90.0; dtheta += 7.5) {
            const double g = gain_3d(p, p.tilt_deg + dphi, p.theta_a_deg + dtheta);
            CHECK(g <= peak);
            if (dphi != 0.0 || dtheta != 0.0) CHECK(g < peak);
        }
    }
}

TEST_CASE("two-axis gain is even around the pointing direction") {
    antenna_pattern p;
    p.tilt_deg = 12.0;
    p.theta_a_deg = 4.0;
    // dyadic offsets so the mirrored arguments are exact
    for (double off : {0.25, 7.5, 22.5, 45.0, 60.0}) {
        CHECK(gain_3d(p, p.tilt_deg + off, p.theta_a_deg) ==
              gain_3d(p, p.tilt_deg - off, p.theta_a_deg));
        CHECK(gain_3d(p, p.tilt_deg, p.theta_a_deg + off) ==
              gain_3d(p, p.tilt_deg, p.theta_a_deg - off));
    }
}

TEST_CASE("azimuth offset wraps to the principal branch") {
    antenna_pattern p;
    CHECK(gain_3d(p, 0.0, 190.0) == gain_3d(p, 0.0, -170.0));
    CHECK(gain_3d(p, 0.0, 180.0) == gain_3d(p, 0.0, -180.0));
    CHECK(gain_3d(p, 0.0, 360.0) == gain_3d(p, 0.0, 0.0));
}

TEST_CASE("off-axis attenuation saturates at a_max") {
    antenna_pattern p; // b 50/50, a_max 20
    const double gmax = boresight_gain(50.0, 50.0);
    // 12*(150/50)^2 = 108 dB of quadratic rolloff, clipped to 20
    CHECK(gain_3d(p, 150.0, 0.0) ==
          doctest::Approx(0.5 * (gmax - 20.0) + 0.5 * gmax).epsilon(1e-12));
    CHECK(gain_3d(p, 150.0, 150.0) == doctest::Approx(gmax - 20.0).epsilon(1e-12));
}

TEST_CASE("circular gain reference values and monotone rolloff") {
    CHECK(gain_circular(55.0, 7000.0, 5000.0) ==
          doctest::Approx(4.806769655500).epsilon(1e-12));
    CHECK(gain_circular(50.0, 2000.0, 3000.0) ==
          doctest::Approx(-4.575300884829).epsilon(1e-12));

    for (double b : {5.0, 50.0, 120.0}) {
        for (double h : {1000.0, 3500.0, 7000.0}) {
            double prev = gain_circular(b, h, 0.0);
            for (double r = 250.0; r <= 10000.0; r += 250.0) {
                const double g = gain_circular(b, h, r);
                CHECK(g < prev);
                prev = g;
            }
        }
    }
    CHECK_THROWS_AS((void)gain_circular(50.0, 0.0, 100.0), validation_error);
    CHECK_THROWS_AS((void)gain_circular(0.5, 1000.0, 100.0), validation_error);
}

TEST_CASE("crossover height reference values") {
    CHECK(crossover_height(30.0, 120.0, 5000.0) ==
          doctest::Approx(8309.234977).epsilon(1e-9));
    CHECK(crossover_height(35.0, 80.0, 5000.0) ==
          doctest::Approx(8622.537686).epsilon(1e-9));
    CHECK(crossover_height(40.0, 80.0, 5000.0) ==
          doctest::Approx(7783.553998930707).epsilon(1e-12));
    // argument order is irrelevant
    CHECK(crossover_height(80.0, 40.0, 5000.0) ==
          crossover_height(40.0, 80.0, 5000.0));

    CHECK_THROWS_AS((void)crossover_height(50.0, 50.0, 5000.0), validation_error);
    CHECK_THROWS_AS((void)crossover_height(40.0, 80.0, 0.0), validation_error);
    // nearly equal beamwidths push the intersection angle past 90 degrees
    CHECK_THROWS_AS((void)crossover_height(150.0, 151.0, 5000.0), no_crossover_error);
}

TEST_CASE("crossover closed form agrees with bisection") {
    const double cases[][3] = {
        {30.0, 120.0, 5000.0}, {35.0, 80.0, 5000.0}, {10.0, 25.0, 800.0},
        {60.0, 140.0, 12000.0}, {5.0, 9.0, 300.0},
    };
    for (const auto& c : cases) {
        const double closed = crossover_height(c[0], c[1], c[2]);
        const double bisected = testing::crossover_by_bisection(c[0], c[1], c[2]);
        CHECK(std::abs(closed - bisected) < 0.1);
    }
}

TEST_CASE("wide beam wins below the crossover, narrow above") {
    const double r = 5000.0;
    const double hx = crossover_height(35.0, 80.0, r);
    CHECK(gain_circular(80.0, 0.9 * hx, r) > gain_circular(35.0, 0.9 * hx, r));
    CHECK(gain_circular(35.0, 1.1 * hx, r) > gain_circular(80.0, 1.1 * hx, r));
    CHECK(gain_circular(35.0, hx, r) ==
          doctest::Approx(gain_circular(80.0, hx, r)).epsilon(1e-9));
}
