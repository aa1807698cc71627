#ifndef AIRCOV_TRADEOFF_HPP
#define AIRCOV_TRADEOFF_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aircov/coverage.hpp"
#include "aircov/deployment.hpp"

namespace aircov {

// Uniform sweep grid: min, min+step, ... up to max inclusive (within half a
// step of slack for rounding).
struct value_grid {
    double min;
    double max;
    double step;
};

std::vector<double> grid_values(const value_grid& g);

// One single-valued sweep result. Points keep grid order; an infeasible
// point carries an empty value instead of disappearing, so families of
// curves stay row-aligned.
struct curve_point {
    double param;
    std::optional<double> value;
};

struct curve {
    std::string param_name;
    std::string value_name;
    // Fixed coordinates distinguishing this curve inside its family,
    // e.g. {"h_m", 7000} or {"f_ghz", 3.5}.
    std::vector<std::pair<std::string, double>> fixed;
    std::string fixed_label; // non-numeric distinguisher (environment name), may be empty
    std::vector<curve_point> points;
};

// Coverage radius versus beamwidth, one curve per height.
std::vector<curve> sweep_radius_vs_beamwidth(const deployment& tmpl,
                                             const std::vector<double>& heights_m,
                                             const value_grid& b_grid,
                                             unsigned threads = 0);

// Coverage radius versus height, one curve per beamwidth.
std::vector<curve> sweep_radius_vs_height(const deployment& tmpl,
                                          const std::vector<double>& beamwidths_deg,
                                          const value_grid& h_grid,
                                          unsigned threads = 0);

// Beamwidth branches solving r*(B) = r_target, per height. Multi-valued:
// each height carries 0, 1 or 2 branch solutions.
struct beamwidth_profile {
    double r_target_m;
    std::vector<std::pair<double, std::vector<double>>> solutions; // (h, branches)
};

std::vector<beamwidth_profile> sweep_beamwidth_vs_height(const deployment& tmpl,
                                                         const std::vector<double>& radii_m,
                                                         const value_grid& h_grid,
                                                         unsigned threads = 0);

// Radius versus beamwidth across carrier frequencies and both environments.
// The deployment template supplies height and loss budget; the shadowing row
// is looked up per frequency.
std::vector<curve> frequency_environment_sweep(const deployment& tmpl,
                                               const std::vector<double>& freqs_ghz,
                                               const value_grid& b_grid,
                                               bool interpolate_shadowing = false,
                                               unsigned threads = 0);

// Finite differences of a sweep curve: central in the interior, one-sided at
// the ends and next to gaps. Needs at least 3 points.
curve gradient(const curve& c);

// max |dr/dB| and |dr/dh| over a (height, beamwidth) grid, for the
// sensitivity comparison. Differences are taken along sweep curves computed
// on the same grid.
struct sensitivity_result {
    double max_dr_db;       // meters per degree
    double at_b_deg, at_h_for_db;
    double max_dr_dh;       // meters per meter
    double at_h_m, at_b_for_dh;
    double ratio;
};

sensitivity_result sensitivity_scan(const deployment& tmpl,
                                    const value_grid& h_grid,
                                    const value_grid& b_grid,
                                    unsigned threads = 0);

} // namespace aircov

#endif
