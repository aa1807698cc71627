#include "aircov/channel.hpp"

#include <cmath>

#include "aircov/errors.hpp"
#include "aircov/math.hpp"

namespace aircov {

const environment& suburban_env() {
    static const environment e{"suburban", 101.6, 0.0, 0.0, 3.25, 1.241};
    return e;
}

const environment& highrise_urban_env() {
    static const environment e{"highrise_urban", 352.0, -1.37, -53.0, 173.8, 4.670};
    return e;
}

const environment& environment_by_name(const std::string& name) {
    if (name == "suburban") return suburban_env();
    if (name == "highrise_urban") return highrise_urban_env();
    throw validation_error("unknown environment '" + name +
                           "' (expected suburban or highrise_urban)");
}

environment make_environment(const std::string& name, double j, double k,
                             double l, double m, double n) {
    if (!(m > 0.0) || !(n > 0.0))
        throw validation_error("environment: m and n must be positive");
    return environment{name, j, k, l, m, n};
}

namespace {

constexpr shadowing_params builtin_shadowing[] = {
    {2.0, -94.20, -3.44, 0.0318, -89.55, -8.87, 0.0927},
    {3.5, -92.90, -3.14, 0.0302, -89.06, -8.63, 0.0921},
    {5.5, -92.80, -2.90, 0.0285, -89.54, -8.47, 0.9000},
};

void check_no_singularity(double q, double t, const char* which) {
    // Denominator q + t*elev must keep one sign over elev in [0, 90].
    const double at0 = q;
    const double at90 = q + t * 90.0;
    if (at0 == 0.0 || at90 == 0.0 || (at0 > 0.0) != (at90 > 0.0))
        throw validation_error(std::string("shadowing_params: ") + which +
                               " denominator changes sign over elevation 0..90");
}

} // namespace

shadowing_params shadowing_table(double frequency_ghz, bool interpolate) {
    for (const auto& row : builtin_shadowing)
        if (row.frequency_ghz == frequency_ghz) return row;
    if (!interpolate)
        throw validation_error(
            "no shadowing table for this frequency (have 2.0, 3.5, 5.5 GHz); "
            "set channel.interpolate_shadowing to interpolate");
    const auto& lo = builtin_shadowing[0];
    const auto& hi = builtin_shadowing[2];
    if (frequency_ghz < lo.frequency_ghz || frequency_ghz > hi.frequency_ghz)
        throw validation_error("shadowing interpolation limited to 2.0..5.5 GHz");
    const shadowing_params* a = &builtin_shadowing[0];
    const shadowing_params* b = &builtin_shadowing[1];
    if (frequency_ghz > b->frequency_ghz) {
        a = &builtin_shadowing[1];
        b = &builtin_shadowing[2];
    }
    const double w = (frequency_ghz - a->frequency_ghz) / (b->frequency_ghz - a->frequency_ghz);
    auto mix = [w](double x, double y) { return x + w * (y - x); };
    return shadowing_params{
        frequency_ghz,
        mix(a->p_mu, b->p_mu), mix(a->q_mu, b->q_mu), mix(a->t_mu, b->t_mu),
        mix(a->p_sigma, b->p_sigma), mix(a->q_sigma, b->q_sigma), mix(a->t_sigma, b->t_sigma),
    };
}

shadowing_params make_shadowing_params(double frequency_ghz,
                                       double p_mu, double q_mu, double t_mu,
                                       double p_sigma, double q_sigma, double t_sigma) {
    if (!(frequency_ghz > 0.0))
        throw validation_error("shadowing_params: frequency must be positive");
    check_no_singularity(q_mu, t_mu, "mean");
    check_no_singularity(q_sigma, t_sigma, "sigma");
    return shadowing_params{frequency_ghz, p_mu, q_mu, t_mu, p_sigma, q_sigma, t_sigma};
}

geometry make_geometry(double h_m, double r_m) {
    if (!(h_m > 0.0))
        throw validation_error("geometry: height must be positive");
    if (!(r_m >= 0.0))
        throw validation_error("geometry: ground distance must be non-negative");
    geometry g;
    g.h_m = h_m;
    g.r_m = r_m;
    g.d_m = std::sqrt(h_m * h_m + r_m * r_m);
    g.phi_ms_deg = rad2deg(std::atan2(r_m, h_m));
    g.elevation_deg = 90.0 - g.phi_ms_deg;
    return g;
}

double elevation_angle(double h_m, double r_m) {
    // delegate so the shorthand agrees bit for bit with the full geometry
    return make_geometry(h_m, r_m).elevation_deg;
}

double los_probability(const environment& env, double elevation_deg) {
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
        throw validation_error("los_probability: elevation must be in [0, 90] degrees");
    const double raw = 0.01 * env.j -
        0.01 * (env.j - env.k) /
            (1.0 + std::pow((elevation_deg - env.l) / env.m, env.n));
    if (std::isnan(raw))
        throw numerical_error("los_probability: fit undefined here "
                              "(negative base raised to fractional power)");
    if (raw < 0.0) return 0.0;
    if (raw > 1.0) return 1.0;
    return raw;
}

shadowing_stats_result shadowing_stats(const shadowing_params& p, double elevation_deg) {
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
        throw validation_error("shadowing_stats: elevation must be in (0, 90] degrees");
    const double den_mu = p.q_mu + p.t_mu * elevation_deg;
    const double den_sg = p.q_sigma + p.t_sigma * elevation_deg;
    if (std::abs(den_mu) < 1e-9 || std::abs(den_sg) < 1e-9)
        throw singularity_error("shadowing_stats: rational fit denominator vanishes "
                                "at this elevation");
    shadowing_stats_result out;
    out.mu_db = (p.p_mu + elevation_deg) / den_mu;
    const double sigma_raw = (p.p_sigma + elevation_deg) / den_sg;
    out.sigma_clamped = sigma_raw < 0.0;
    out.sigma_db = out.sigma_clamped ? 0.0 : sigma_raw;
    return out;
}

double fspl_db(double f_ghz, double d_m) {
    if (!(f_ghz > 0.0))
        throw validation_error("fspl: frequency must be positive");
    if (!(d_m > 0.0))
        throw validation_error("fspl: distance must be positive");
    const double f_hz = f_ghz * 1e9;
    return 20.0 * std::log10(4.0 * pi * f_hz * d_m / speed_of_light);
}

} // namespace aircov
