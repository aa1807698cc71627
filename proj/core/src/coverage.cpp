#include "aircov/coverage.hpp"

#include <cmath>

#include "aircov/antenna.hpp"
#include "aircov/errors.hpp"
#include "aircov/parallel.hpp"

namespace aircov {

double exceed_prob_nlos(const deployment& dep, double gain_db, double d_m,
                        double elevation_deg) {
    const auto sh = shadowing_stats(dep.shadow, elevation_deg);
    const double num = fspl_db(dep.f_ghz, d_m) + sh.mu_db - gain_db - dep.pl_max_db;
    const double den = std::sqrt(sh.sigma_db * sh.sigma_db +
                                 dep.sigma_n_db * dep.sigma_n_db);
    return q_function(num / den);
}

double exceed_prob_los(const deployment& dep, double gain_db, double d_m) {
    if (!(dep.sigma_l_db > 0.0))
        throw validation_error("exceed_prob_los: sigma_l must be positive");
    const double num = fspl_db(dep.f_ghz, d_m) - gain_db - dep.pl_max_db;
    return q_function(num / dep.sigma_l_db);
}

double coverage_probability_circular(double r_m, const deployment& dep) {
    const geometry g = make_geometry(dep.h_m, r_m);
    const double gain = gain_circular(dep.antenna.b_phi_deg, dep.h_m, r_m,
                                      dep.antenna.tilt_deg);
    const double p_los = los_probability(dep.env, g.elevation_deg);
    return p_los * exceed_prob_los(dep, gain, g.d_m) +
           (1.0 - p_los) * exceed_prob_nlos(dep, gain, g.d_m, g.elevation_deg);
}

double coverage_probability(const deployment& dep, const ground_point& pt) {
    const double r = std::hypot(pt.x_m, pt.y_m);
    // A tilt-free symmetric pattern is exactly the circular special case;
    // route there so the two forms can never drift apart.
    if (dep.antenna.tilt_deg == 0.0 &&
        dep.antenna.b_phi_deg == dep.antenna.b_theta_deg)
        return coverage_probability_circular(r, dep);

    const geometry g = make_geometry(dep.h_m, r);
    const double theta_ms = rad2deg(std::atan2(pt.y_m, pt.x_m));
    const double gain = gain_3d(dep.antenna, g.phi_ms_deg, theta_ms);
    const double p_los = los_probability(dep.env, g.elevation_deg);
    return p_los * exceed_prob_los(dep, gain, g.d_m) +
           (1.0 - p_los) * exceed_prob_nlos(dep, gain, g.d_m, g.elevation_deg);
}

double mean_rss_dbm(double r_m, const deployment& dep) {
    const geometry g = make_geometry(dep.h_m, r_m);
    const double gain = gain_circular(dep.antenna.b_phi_deg, dep.h_m, r_m,
                                      dep.antenna.tilt_deg);
    const double p_nlos = 1.0 - los_probability(dep.env, g.elevation_deg);
    const auto sh = shadowing_stats(dep.shadow, g.elevation_deg);
    return dep.t_dbm + gain - fspl_db(dep.f_ghz, g.d_m) - p_nlos * sh.mu_db;
}

coverage_radius solve_coverage_radius(const deployment& dep, const radius_options& opt) {
    validate(dep);
    if (!(opt.scan_step_m > 0.0) || !(opt.cap_m > opt.scan_step_m) ||
        !(opt.resolution_m > 0.0))
        throw validation_error("solve_coverage_radius: bad solver options");

    coverage_radius out;
    if (coverage_probability_circular(1.0, dep) < dep.epsilon)
        return out; // not covered even next to the nadir

    out.covered_at_origin = true;
    double lo = 1.0;
    double hi = 0.0;
    bool bracketed = false;
    std::size_t first_out = 0;
    for (std::size_t i = 1;; ++i) {
        const double r = opt.scan_step_m * static_cast<double>(i);
        if (r > opt.cap_m) break;
        if (coverage_probability_circular(r, dep) >= dep.epsilon) {
            lo = r;
        } else {
            hi = r;
            first_out = i;
            bracketed = true;
            break;
        }
    }
    if (!bracketed)
        throw unbounded_radius_error("solve_coverage_radius: still covered at the "
                                     "scan cap; raise cap_m if this is intended");

    while (hi - lo > opt.resolution_m) {
        const double mid = 0.5 * (lo + hi);
        if (coverage_probability_circular(mid, dep) >= dep.epsilon)
            lo = mid;
        else
            hi = mid;
    }
    out.r_m = lo;

    if (opt.detect_extra_coverage) {
        // Coarse look past the edge for detached covered rings.
        for (std::size_t i = first_out + 1;; ++i) {
            const double r = opt.scan_step_m * static_cast<double>(i);
            if (r > opt.cap_m) break;
            if (coverage_probability_circular(r, dep) >= dep.epsilon) {
                out.extra_coverage_beyond = true;
                break;
            }
        }
    }
    return out;
}

std::vector<double> solve_beamwidths_for_radius(double h_m, double r_target_m,
                                                const deployment& dep) {
    if (!(r_target_m > 0.0))
        throw validation_error("solve_beamwidths_for_radius: target radius must be positive");

    deployment d = dep;
    d.h_m = h_m;
    auto radius_at = [&](double b_deg) {
        d.antenna.b_phi_deg = b_deg;
        d.antenna.b_theta_deg = b_deg;
        try {
            return solve_coverage_radius(d).r_m;
        } catch (const unbounded_radius_error&) {
            // Covered beyond the cap: certainly past any sane target.
            return radius_options{}.cap_m;
        }
    };

    constexpr double b_lo = 1.0, b_hi = 180.0, step = 0.5, tol = 0.005;
    std::vector<double> out;
    double prev_b = b_lo;
    double prev_g = radius_at(prev_b) - r_target_m;
    for (double b = b_lo + step; b < b_hi; b += step) {
        const double g = radius_at(b) - r_target_m;
        if ((prev_g <= 0.0) != (g <= 0.0)) {
            double lo = prev_b, hi = b, g_lo = prev_g;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double g_mid = radius_at(mid) - r_target_m;
                if ((g_mid <= 0.0) == (g_lo <= 0.0)) {
                    lo = mid;
                    g_lo = g_mid;
                } else {
                    hi = mid;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev_b = b;
        prev_g = g;
    }
    return out;
}

coverage_field coverage_map(const deployment& dep, const grid_spec& grid,
                            unsigned threads) {
    validate(dep);
    if (grid.nx < 1 || grid.ny < 1)
        throw validation_error("coverage_map: grid must have at least one node per axis");
    if (!(grid.x_max_m >= grid.x_min_m) || !(grid.y_max_m >= grid.y_min_m))
        throw validation_error("coverage_map: inverted grid extents");

    coverage_field field;
    field.grid = grid;
    field.p.resize(grid.nx * grid.ny);
    auto coord = [](double lo, double hi, std::size_t n, std::size_t i) {
        if (n == 1) return lo;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    parallel_for(grid.ny, [&](std::size_t iy) {
        const double y = coord(grid.y_min_m, grid.y_max_m, grid.ny, iy);
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            const double x = coord(grid.x_min_m, grid.x_max_m, grid.nx, ix);
            field.p[iy * grid.nx + ix] = coverage_probability(dep, {x, y});
        }
    }, threads);
    return field;
}

} // namespace aircov
