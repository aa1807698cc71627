#pragma once

#include <optional>
#include <vector>

#include "aircov/deployment.hpp"

namespace aircov {

enum class packing_scheme { circle, hex };

const char* to_string(packing_scheme s);
packing_scheme packing_scheme_from_string(const std::string& s);

// One row of the cell-packing table: the largest per-cell radius (as a
// fraction of the target-region radius R_t) for which N equal cells fit the
// arrangement, and the fraction of the target region they then cover.
struct packing_entry_t {
    double r_ratio;
    double coverage_percent;
};

packing_entry_t packing_entry(int n, packing_scheme scheme);

// Analytic anchor for the N = 3 hexagonal row: three half-size hex cells
// cover exactly 3/4 of the target hex area, independent of its size.
double hex_coverage_n3();

struct fleet_search {
    double h_step_m;
    double b_step_deg;
    double epsilon;
    double r_star_m;   // largest attainable cell radius over the search box
    double h_star_m;   // where it is attained
    double b_star_deg;
};

struct fleet_plan {
    bool feasible = false;
    int n_uavs = 0;
    double h_m = 0.0;
    double b_deg = 0.0;
    double cell_radius_m = 0.0;    // required per-UAV cell radius
    double coverage_percent = 0.0; // total coverage of the target at this N
    fleet_search search{};
};

struct search_box {
    double h_min_m = 0.0; // exclusive
    double h_max_m = 5000.0;
    double b_min_deg = 1.0; // exclusive
    double b_max_deg = 180.0; // exclusive
};

// The expensive half of min_uavs: the largest attainable per-UAV cell
// radius anywhere in the search box. Independent of the target radius, so
// sweeps over R_t run it once.
fleet_search max_cell_radius_search(const deployment& tmpl,
                                    const search_box& box = {},
                                    unsigned threads = 0);

// Smallest fleet that covers a target of radius r_t_m to at least
// c_min_percent (with the 1% tolerance the tables are quoted at), given that
// each UAV can be placed anywhere in the search box.
fleet_plan min_uavs(double r_t_m, double c_min_percent, packing_scheme scheme,
                    const fleet_search& search);
fleet_plan min_uavs(double r_t_m, double c_min_percent, packing_scheme scheme,
                    const deployment& tmpl, const search_box& box = {},
                    unsigned threads = 0);

// Required per-cell radius for an N-UAV hex fleet. When the coverage target
// is below the packing's own coverage, cells may shrink by the area fraction
// (optional rule, on by default).
double fleet_cell_radius(int n, double r_t_m, double c_min_percent,
                         bool radius_shrink = true);

// Beamwidth each of N hex-packed UAVs at altitude h needs so the fleet meets
// c_min over the target. Empty when no beamwidth reaches the required radius
// at this altitude. Multiple solutions resolve to the widest beam.
std::optional<double> beamwidth_for_fleet(int n, double r_t_m, double h_m,
                                          double c_min_percent,
                                          const deployment& tmpl,
                                          bool radius_shrink = true);

struct altitude_profile {
    std::vector<double> h_m; // every altitude whose coverage radius hits the target
    double h_peak_m = 0.0;   // altitude maximizing the coverage radius
    double r_peak_m = 0.0;
};

altitude_profile altitude_options(double b_deg, double r_target_m,
                                  const deployment& tmpl,
                                  double h_min_m = 0.0, double h_max_m = 5000.0,
                                  unsigned threads = 0);

} // namespace aircov
