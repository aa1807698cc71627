#include "aircov/antenna.hpp"

#include <algorithm>
#include <cmath>

#include "aircov/errors.hpp"
#include "aircov/math.hpp"

namespace aircov {

namespace {

void check_beamwidth(double b_deg, const char* name) {
    // Below 1 degree the quadratic model has no meaning; 180 is the pole of
    // the parabolic approximation.
    if (!(b_deg >= 1.0 && b_deg < 180.0))
        throw validation_error(std::string(name) + " must be in [1, 180) degrees");
}

double wrap_degrees(double x) {
    // Wrap to (-180, 180].
    x = std::fmod(x, 360.0);
    if (x <= -180.0) x += 360.0;
    if (x > 180.0) x -= 360.0;
    return x;
}

} // namespace

void validate(const antenna_pattern& p) {
    check_beamwidth(p.b_phi_deg, "b_phi_deg");
    check_beamwidth(p.b_theta_deg, "b_theta_deg");
    if (p.lambda_phi < 0.0 || p.lambda_theta < 0.0)
        throw validation_error("beam weights must be non-negative");
    if (!(p.a_max_db > 0.0))
        throw validation_error("a_max_db must be positive");
}

double boresight_gain(double b_phi_deg, double b_theta_deg) {
    check_beamwidth(b_phi_deg, "b_phi_deg");
    check_beamwidth(b_theta_deg, "b_theta_deg");
    return 10.0 * std::log10(29000.0 / (b_phi_deg * b_theta_deg));
}

double gain_3d(const antenna_pattern& p, double phi_ms_deg, double theta_ms_deg) {
    validate(p);
    const double g_max = boresight_gain(p.b_phi_deg, p.b_theta_deg);
    const double dphi = phi_ms_deg - p.tilt_deg;
    const double dtheta = wrap_degrees(theta_ms_deg - p.theta_a_deg);
    const double att_phi = std::min(12.0 * (dphi / p.b_phi_deg) * (dphi / p.b_phi_deg),
                                    p.a_max_db);
    const double att_theta = std::min(12.0 * (dtheta / p.b_theta_deg) * (dtheta / p.b_theta_deg),
                                      p.a_max_db);
    return p.lambda_phi * (g_max - att_phi) + p.lambda_theta * (g_max - att_theta);
}

double gain_circular(double b_deg, double h_m, double r_m, double tilt_deg) {
    check_beamwidth(b_deg, "beamwidth");
    if (!(h_m > 0.0))
        throw validation_error("gain_circular: height must be positive");
    if (!(r_m >= 0.0))
        throw validation_error("gain_circular: ground distance must be non-negative");
    const double phi_ms = rad2deg(std::atan2(r_m, h_m));
    const double off = (phi_ms - tilt_deg) / b_deg;
    return 10.0 * std::log10(29000.0 / (b_deg * b_deg)) - 12.0 * off * off;
}

double crossover_height(double b1_deg, double b2_deg, double r_m) {
    check_beamwidth(b1_deg, "b1_deg");
    check_beamwidth(b2_deg, "b2_deg");
    if (b1_deg == b2_deg)
        throw validation_error("crossover_height: beamwidths must differ");
    if (b1_deg > b2_deg) std::swap(b1_deg, b2_deg);
    if (!(r_m > 0.0))
        throw validation_error("crossover_height: ground distance must be positive");
    const double b1sq = b1_deg * b1_deg;
    const double b2sq = b2_deg * b2_deg;
    const double angle_deg = std::sqrt((5.0 / 3.0) * std::log10(b2_deg / b1_deg) *
                                       b1sq * b2sq / (b2sq - b1sq));
    if (angle_deg >= 90.0)
        throw no_crossover_error("crossover_height: gain curves do not intersect "
                                 "at positive height for these beamwidths");
    return r_m / std::tan(deg2rad(angle_deg));
}

} // namespace aircov
