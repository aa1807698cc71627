#include "doctest.h"

#include <cmath>

#include "aircov/coverage.hpp"
#include "aircov/errors.hpp"
#include "aircov/packing.hpp"

using namespace aircov;

namespace {

const double hex_ratio[10] = {1.0, 0.447, 0.500, 0.400, 0.333,
                              0.286, 0.333, 0.286, 0.250, 0.286};
const double hex_cov[10] = {100.0, 75.0, 75.0, 75.0, 75.0,
                            75.0, 77.8, 72.7, 69.2, 75.0};
const double circle_ratio[10] = {1.0, 0.500, 0.464, 0.413, 0.370,
                                 0.333, 0.333, 0.302, 0.275, 0.261};
const double circle_cov[10] = {100.0, 50.0, 64.6, 68.6, 68.5,
                               66.6, 77.8, 73.3, 68.9, 68.7};

fleet_search reference_search() {
    fleet_search s;
    s.h_step_m = 250.0;
    s.b_step_deg = 2.0;
    s.epsilon = 0.8;
    s.r_star_m = 4822.65625;
    s.h_star_m = 5000.0;
    s.b_star_deg = 73.0;
    return s;
}

} // namespace

TEST_CASE("packing tables are stored exactly") {
    for (int n = 1; n <= 10; ++n) {
        const auto h = packing_entry(n, packing_scheme::hex);
        CHECK(h.r_ratio == hex_ratio[n - 1]);
        CHECK(h.coverage_percent == hex_cov[n - 1]);
        const auto c = packing_entry(n, packing_scheme::circle);
        CHECK(c.r_ratio == circle_ratio[n - 1]);
        CHECK(c.coverage_percent == circle_cov[n - 1]);
    }
    CHECK_THROWS_AS((void)packing_entry(0, packing_scheme::hex), validation_error);
    CHECK_THROWS_AS((void)packing_entry(11, packing_scheme::circle), validation_error);
}

TEST_CASE("three-cell hex coverage is exactly three quarters") {
    CHECK(hex_coverage_n3() == 75.0);
    CHECK(packing_entry(3, packing_scheme::hex).coverage_percent == hex_coverage_n3());
}

TEST_CASE("hex keeps its headline advantage over circles") {
    double hex_min = 100.0, circle_min = 100.0;
    for (int n = 1; n <= 10; ++n) {
        hex_min = std::min(hex_min, packing_entry(n, packing_scheme::hex).coverage_percent);
        circle_min =
            std::min(circle_min, packing_entry(n, packing_scheme::circle).coverage_percent);
    }
    CHECK(hex_min == 69.2);
    CHECK(hex_min >= 69.0);
    CHECK(circle_min == 50.0);
}

TEST_CASE("scheme names round trip") {
    CHECK(to_string(packing_scheme::hex) == "hex");
    CHECK(to_string(packing_scheme::circle) == "circle");
    CHECK(packing_scheme_from_string("hex") == packing_scheme::hex);
    CHECK(packing_scheme_from_string("circle") == packing_scheme::circle);
    CHECK_THROWS_AS((void)packing_scheme_from_string("square"), validation_error);
}

TEST_CASE("fleet sizing against a fixed search result") {
    const fleet_search search = reference_search();

    auto plan = min_uavs(3500.0, 70.0, packing_scheme::hex, search);
    CHECK(plan.feasible);
    CHECK(plan.n_uavs == 1);
    CHECK(plan.cell_radius_m == 3500.0);
    CHECK(plan.coverage_percent == 100.0);
    CHECK(plan.h_m == 5000.0);
    CHECK(plan.b_deg == 73.0);

    plan = min_uavs(5000.0, 70.0, packing_scheme::hex, search);
    CHECK(plan.n_uavs == 2);
    CHECK(plan.cell_radius_m == 0.447 * 5000.0);

    // ratio(3) is worse than ratio(2), so three cells are never the minimum
    plan = min_uavs(11000.0, 70.0, packing_scheme::hex, search);
    CHECK(plan.n_uavs == 4);
    plan = min_uavs(14000.0, 70.0, packing_scheme::hex, search);
    CHECK(plan.n_uavs == 5);

    // beyond the table the search reports infeasible rather than throwing
    plan = min_uavs(20000.0, 70.0, packing_scheme::hex, search);
    CHECK_FALSE(plan.feasible);
    CHECK(plan.n_uavs == 0);

    // circle coverage gates out 2..6 cells entirely at c_min = 70
    plan = min_uavs(5000.0, 70.0, packing_scheme::circle, search);
    CHECK(plan.n_uavs == 7);
    CHECK(plan.coverage_percent == 77.8);

    // full-coverage demand leaves only the single-cell layout
    plan = min_uavs(6000.0, 100.0, packing_scheme::hex, search);
    CHECK_FALSE(plan.feasible);
    plan = min_uavs(4000.0, 100.0, packing_scheme::hex, search);
    CHECK(plan.n_uavs == 1);

    CHECK_THROWS_AS((void)min_uavs(0.0, 70.0, packing_scheme::hex, search),
                    validation_error);
    CHECK_THROWS_AS((void)min_uavs(3500.0, 0.0, packing_scheme::hex, search),
                    validation_error);
    CHECK_THROWS_AS((void)min_uavs(3500.0, 101.0, packing_scheme::hex, search),
                    validation_error);
}

TEST_CASE("fleet size never shrinks as the target grows") {
    const fleet_search search = reference_search();
    int prev = 0;
    for (double rt = 250.0; rt <= 14000.0; rt += 250.0) {
        const auto plan = min_uavs(rt, 70.0, packing_scheme::hex, search);
        REQUIRE(plan.feasible);
        CHECK(plan.n_uavs >= prev);
        prev = plan.n_uavs;
    }
}

TEST_CASE("cell radius shrinks with the coverage budget") {
    // with a 60% requirement against 75% table coverage the cell scales by
    // sqrt(60/75)
    const double r = fleet_cell_radius(2, 3500.0, 60.0);
    CHECK(r == 0.447 * 3500.0 * std::sqrt(60.0 / 75.0));

    // requirement above the table entry: no shrink
    CHECK(fleet_cell_radius(2, 3500.0, 90.0) == 0.447 * 3500.0);
    // shrink disabled
    CHECK(fleet_cell_radius(2, 3500.0, 60.0, false) == 0.447 * 3500.0);

    CHECK_THROWS_AS((void)fleet_cell_radius(0, 3500.0, 60.0), validation_error);
}

TEST_CASE("beamwidth backs out of the fleet cell radius") {
    const deployment tmpl = make_deployment(1000.0, 50.0);

    const auto b = beamwidth_for_fleet(1, 3500.0, 1000.0, 60.0, tmpl);
    REQUIRE(b.has_value());
    deployment at = tmpl;
    at.antenna.b_phi_deg = *b;
    at.antenna.b_theta_deg = *b;
    // the 60% budget shrinks the required cell below the full target radius
    const double want = fleet_cell_radius(1, 3500.0, 60.0);
    CHECK(want < 3500.0);
    CHECK(std::abs(solve_coverage_radius(at).r_m - want) < 2.0);

    // a cell the height cannot reach yields no beamwidth
    CHECK_FALSE(beamwidth_for_fleet(1, 3600.0, 1000.0, 100.0, tmpl).has_value());
}

TEST_CASE("altitude options bracket the feasible band") {
    const deployment tmpl = make_deployment(1000.0, 50.0);

    const auto prof = altitude_options(50.0, 2000.0, tmpl);
    CHECK(prof.r_peak_m >= 2000.0);
    for (std::size_t i = 1; i < prof.h_m.size(); ++i)
        CHECK(prof.h_m[i] > prof.h_m[i - 1]);
    for (double h : prof.h_m) {
        deployment at = tmpl;
        at.h_m = h;
        CHECK(std::abs(solve_coverage_radius(at).r_m - 2000.0) < 5.0);
    }

    // unreachable target: no altitudes, peak still reported
    const auto none = altitude_options(50.0, 2.0 * prof.r_peak_m, tmpl);
    CHECK(none.h_m.empty());
    CHECK(none.r_peak_m == prof.r_peak_m);

    CHECK_THROWS_AS((void)altitude_options(0.5, 2000.0, tmpl), validation_error);
    CHECK_THROWS_AS((void)altitude_options(50.0, 2000.0, tmpl, 3000.0, 1000.0),
                    validation_error);
}

TEST_CASE("full fleet plan from a live search") {
    const deployment tmpl = make_deployment(1000.0, 50.0);
    const auto plan = min_uavs(3500.0, 70.0, packing_scheme::hex, tmpl);
    CHECK(plan.feasible);
    CHECK(plan.n_uavs == 1);
    CHECK(plan.search.r_star_m == 4822.65625);
    CHECK(plan.search.h_star_m == 5000.0);
    CHECK(plan.search.b_star_deg == 73.0);
}
