#ifndef AIRCOV_COVERAGE_HPP
#define AIRCOV_COVERAGE_HPP

#include <cstddef>
#include <vector>

#include "aircov/deployment.hpp"
#include "aircov/math.hpp"

namespace aircov {

// Ground location in the UAV-nadir frame.
struct ground_point {
    double x_m;
    double y_m;
};

// P(path loss <= budget) in the NLoS state, given the pattern gain toward
// the point, slant distance and elevation.
double exceed_prob_nlos(const deployment& dep, double gain_db, double d_m,
                        double elevation_deg);

// Same in the LoS state (no shadowing term, spread sigma_l).
double exceed_prob_los(const deployment& dep, double gain_db, double d_m);

// LoS/NLoS-weighted coverage probability at an arbitrary ground point using
// the full two-axis pattern. When the pattern is circular (zero tilt,
// equal beamwidths) this routes through the closed circular form so the two
// entry points agree exactly.
double coverage_probability(const deployment& dep, const ground_point& pt);

// Closed-form coverage probability on the circle of radius r, using the
// single-lobe circular gain (tilt kept inside the gain term).
double coverage_probability_circular(double r_m, const deployment& dep);

// Expected received signal strength at nadir distance r, in dBm.
double mean_rss_dbm(double r_m, const deployment& dep);

struct radius_options {
    double scan_step_m = 50.0;
    double cap_m = 100000.0;
    double resolution_m = 1.0;
    bool detect_extra_coverage = false; // scan past the first edge for more covered rings
};

struct coverage_radius {
    double r_m = 0.0;
    bool covered_at_origin = false;  // false means epsilon was missed even at r = 1
    bool extra_coverage_beyond = false;
};

// Largest contiguous covered-disc radius: outward scan brackets the first
// crossing below epsilon, bisection refines it to resolution_m. A deployment
// that misses epsilon at r = 1 m yields radius 0 (covered_at_origin false).
// If the probability never drops below epsilon before cap_m, throws
// unbounded_radius_error.
coverage_radius solve_coverage_radius(const deployment& dep,
                                      const radius_options& opt = {});

// All beamwidths whose solved coverage radius equals r_target at height h.
// Scans [1, 180) at 0.5 degrees and bisects each bracket to 0.01 degrees;
// the trade-off curve is single-peaked, so 0, 1 or 2 branches come back.
std::vector<double> solve_beamwidths_for_radius(double h_m, double r_target_m,
                                                const deployment& dep);

struct grid_spec {
    double x_min_m, x_max_m;
    double y_min_m, y_max_m;
    std::size_t nx, ny;
};

struct coverage_field {
    grid_spec grid;
    std::vector<double> p; // row-major, y outer, x inner
};

// coverage_probability sampled on a rectangular grid (parallel over nodes).
coverage_field coverage_map(const deployment& dep, const grid_spec& grid,
                            unsigned threads = 0);

} // namespace aircov

#endif
