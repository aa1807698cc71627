#ifndef AIRCOV_ANTENNA_HPP
#define AIRCOV_ANTENNA_HPP

namespace aircov {

// Parabolic two-axis pattern with independent 3 dB beamwidths, per-axis
// weights, mechanical tilt and azimuth orientation, and a side-lobe floor.
struct antenna_pattern {
    double b_phi_deg = 50.0;
    double b_theta_deg = 50.0;
    double lambda_phi = 0.5;   // weights default to 0.5 each so the boresight
    double lambda_theta = 0.5; // gain equals g_max rather than 2*g_max
    double tilt_deg = 0.0;
    double theta_a_deg = 0.0;
    double a_max_db = 20.0;
};

// Throws validation_error if beamwidths leave [1, 180), weights are negative,
// or the attenuation floor is not positive.
void validate(const antenna_pattern& p);

// Peak gain 10*log10(29000 / (b_phi * b_theta)) in dB.
double boresight_gain(double b_phi_deg, double b_theta_deg);

// Full two-axis pattern gain at the given vertical/horizontal angles.
// The azimuth offset is wrapped to (-180, 180] before the quadratic term.
double gain_3d(const antenna_pattern& p, double phi_ms_deg, double theta_ms_deg);

// Single-lobe circularly symmetric form used by the closed-form coverage
// expressions: no a_max floor, one axis, offset measured from the tilt.
double gain_circular(double b_deg, double h_m, double r_m, double tilt_deg = 0.0);

// Height at which the circular gains of two beamwidths intersect at ground
// distance r. Above the crossover the narrower beam is stronger, below it
// the wider one is. Throws no_crossover_error when the closed form's inner
// angle reaches 90 degrees (the curves never meet at positive height).
double crossover_height(double b1_deg, double b2_deg, double r_m);

} // namespace aircov

#endif
