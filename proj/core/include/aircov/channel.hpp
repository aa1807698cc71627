#ifndef AIRCOV_CHANNEL_HPP
#define AIRCOV_CHANNEL_HPP

#include <string>

namespace aircov {

// Empirical LoS-probability fit for one environment class.
struct environment {
    std::string name;
    double j;
    double k;
    double l;
    double m;
    double n;
};

// The two calibrated environments shipped with the library.
const environment& suburban_env();
const environment& highrise_urban_env();
const environment& environment_by_name(const std::string& name);

// Validates a user-supplied parameter set (m > 0, n > 0).
environment make_environment(const std::string& name, double j, double k,
                             double l, double m, double n);

// Rational fits for the elevation-dependent shadowing mean and spread,
// one row pair per carrier frequency.
struct shadowing_params {
    double frequency_ghz;
    double p_mu, q_mu, t_mu;
    double p_sigma, q_sigma, t_sigma;
};

// Built-in rows exist for 2.0, 3.5 and 5.5 GHz. Other frequencies are
// rejected unless interpolate is set, in which case the coefficients are
// interpolated linearly in frequency between the bracketing rows.
shadowing_params shadowing_table(double frequency_ghz, bool interpolate = false);

// Strictly validated constructor for user-supplied rows: both rational fits
// must be singularity-free over elevation 0..90 (denominator endpoints must
// not straddle zero). Built-in rows bypass this check deliberately: the
// shipped 5.5 GHz spread row has a sign change inside the band, and callers
// get a clamped-to-zero spread plus a flag in that region instead of a
// constructor error.
shadowing_params make_shadowing_params(double frequency_ghz,
                                       double p_mu, double q_mu, double t_mu,
                                       double p_sigma, double q_sigma, double t_sigma);

struct shadowing_stats_result {
    double mu_db;
    double sigma_db;
    bool sigma_clamped; // raw sigma was negative and got clamped to 0
};

// Slant geometry between a UAV at height h and a ground point at nadir
// distance r. Angles in degrees.
struct geometry {
    double h_m;
    double r_m;
    double d_m;           // slant range
    double phi_ms_deg;    // angle from vertical at the UAV
    double elevation_deg; // 90 - phi_ms, as seen from the ground
};

geometry make_geometry(double h_m, double r_m);

// Elevation angle of the UAV seen from the ground point, in (0, 90].
double elevation_angle(double h_m, double r_m);

// Elevation-dependent line-of-sight probability, clamped to [0, 1].
double los_probability(const environment& env, double elevation_deg);

// Mean and standard deviation of the NLoS shadowing excess loss in dB.
// Throws singularity_error if a rational-fit denominator vanishes at this
// elevation; clamps a negative spread to zero and flags it.
shadowing_stats_result shadowing_stats(const shadowing_params& p, double elevation_deg);

// Free-space path loss in dB at frequency f (GHz) over distance d (m).
double fspl_db(double f_ghz, double d_m);

inline constexpr double speed_of_light = 299792458.0;

} // namespace aircov

#endif
