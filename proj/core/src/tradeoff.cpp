#include "aircov/tradeoff.hpp"

#include <cmath>

#include "aircov/errors.hpp"
#include "aircov/parallel.hpp"

namespace aircov {

std::vector<double> grid_values(const value_grid& g) {
    if (!(g.step > 0.0))
        throw validation_error("grid: step must be positive");
    if (!(g.max >= g.min))
        throw validation_error("grid: max must be >= min");
    const std::size_t n =
        static_cast<std::size_t>(std::floor((g.max - g.min) / g.step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = g.min + g.step * static_cast<double>(i);
    return out;
}

namespace {

std::optional<double> radius_or_null(deployment dep, double h_m, double b_deg) {
    dep.h_m = h_m;
    dep.antenna.b_phi_deg = b_deg;
    dep.antenna.b_theta_deg = b_deg;
    const coverage_radius cr = solve_coverage_radius(dep);
    if (!cr.covered_at_origin) return std::nullopt;
    return cr.r_m;
}

} // namespace

std::vector<curve> sweep_radius_vs_beamwidth(const deployment& tmpl,
                                             const std::vector<double>& heights_m,
                                             const value_grid& b_grid,
                                             unsigned threads) {
    if (!(b_grid.step <= 2.0))
        throw validation_error("radius-vs-beamwidth sweep: grid step must be <= 2 degrees");
    const std::vector<double> bs = grid_values(b_grid);
    std::vector<curve> out;
    for (double h : heights_m) {
        curve c;
        c.param_name = "b_deg";
        c.value_name = "r_m";
        c.fixed = {{"h_m", h}};
        c.points.resize(bs.size());
        parallel_for(bs.size(), [&](std::size_t i) {
            c.points[i] = {bs[i], radius_or_null(tmpl, h, bs[i])};
        }, threads);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<curve> sweep_radius_vs_height(const deployment& tmpl,
                                          const std::vector<double>& beamwidths_deg,
                                          const value_grid& h_grid,
                                          unsigned threads) {
    if (!(h_grid.min > 0.0))
        throw validation_error("radius-vs-height sweep: heights must be positive");
    const std::vector<double> hs = grid_values(h_grid);
    std::vector<curve> out;
    for (double b : beamwidths_deg) {
        curve c;
        c.param_name = "h_m";
        c.value_name = "r_m";
        c.fixed = {{"b_deg", b}};
        c.points.resize(hs.size());
        parallel_for(hs.size(), [&](std::size_t i) {
            c.points[i] = {hs[i], radius_or_null(tmpl, hs[i], b)};
        }, threads);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<beamwidth_profile> sweep_beamwidth_vs_height(const deployment& tmpl,
                                                         const std::vector<double>& radii_m,
                                                         const value_grid& h_grid,
                                                         unsigned threads) {
    if (!(h_grid.min > 0.0))
        throw validation_error("beamwidth-vs-height sweep: heights must be positive");
    const std::vector<double> hs = grid_values(h_grid);
    std::vector<beamwidth_profile> out;
    for (double r_target : radii_m) {
        beamwidth_profile prof;
        prof.r_target_m = r_target;
        prof.solutions.resize(hs.size());
        parallel_for(hs.size(), [&](std::size_t i) {
            prof.solutions[i] = {hs[i],
                                 solve_beamwidths_for_radius(hs[i], r_target, tmpl)};
        }, threads);
        out.push_back(std::move(prof));
    }
    return out;
}

std::vector<curve> frequency_environment_sweep(const deployment& tmpl,
                                               const std::vector<double>& freqs_ghz,
                                               const value_grid& b_grid,
                                               bool interpolate_shadowing,
                                               unsigned threads) {
    const std::vector<double> bs = grid_values(b_grid);
    std::vector<curve> out;
    for (const auto* env : {&suburban_env(), &highrise_urban_env()}) {
        for (double f : freqs_ghz) {
            deployment dep = tmpl;
            dep.env = *env;
            dep.f_ghz = f;
            dep.shadow = shadowing_table(f, interpolate_shadowing);
            curve c;
            c.param_name = "b_deg";
            c.value_name = "r_m";
            c.fixed = {{"f_ghz", f}, {"h_m", dep.h_m}};
            c.fixed_label = env->name;
            c.points.resize(bs.size());
            parallel_for(bs.size(), [&](std::size_t i) {
                c.points[i] = {bs[i], radius_or_null(dep, dep.h_m, bs[i])};
            }, threads);
            out.push_back(std::move(c));
        }
    }
    return out;
}

curve gradient(const curve& c) {
    const std::size_t n = c.points.size();
    if (n < 3)
        throw validation_error("gradient: need at least 3 points");
    const double step = c.points[1].param - c.points[0].param;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = c.points[i].param - c.points[i - 1].param;
        if (std::abs(d - step) > 1e-6 * std::max(1.0, std::abs(step)))
            throw validation_error("gradient: parameter grid is not uniform");
    }

    curve g;
    g.param_name = c.param_name;
    g.value_name = "d_" + c.value_name + "_d_" + c.param_name;
    g.fixed = c.fixed;
    g.fixed_label = c.fixed_label;
    g.points.resize(n);
    auto val = [&](std::size_t i) { return c.points[i].value; };
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<double> d;
        const bool has_prev = i > 0 && val(i - 1).has_value();
        const bool has_next = i + 1 < n && val(i + 1).has_value();
        if (has_prev && has_next)
            d = (*val(i + 1) - *val(i - 1)) / (2.0 * step);
        else if (has_next && val(i).has_value())
            d = (*val(i + 1) - *val(i)) / step;
        else if (has_prev && val(i).has_value())
            d = (*val(i) - *val(i - 1)) / step;
        g.points[i] = {c.points[i].param, d};
    }
    return g;
}

sensitivity_result sensitivity_scan(const deployment& tmpl,
                                    const value_grid& h_grid,
                                    const value_grid& b_grid,
                                    unsigned threads) {
    if (!(h_grid.min > 0.0))
        throw validation_error("sensitivity_scan: heights must be positive");
    const std::vector<double> hs = grid_values(h_grid);
    const std::vector<double> bs = grid_values(b_grid);
    if (hs.size() < 3 || bs.size() < 3)
        throw validation_error("sensitivity_scan: grid too coarse");

    // Radius surface; an uncovered cell contributes radius 0, which is what
    // the trade-off figures plot there.
    const std::size_t nh = hs.size(), nb = bs.size();
    std::vector<double> r(nh * nb, 0.0);
    parallel_for(nh * nb, [&](std::size_t k) {
        const auto v = radius_or_null(tmpl, hs[k / nb], bs[k % nb]);
        r[k] = v.value_or(0.0);
    }, threads);
    auto at = [&](std::size_t ih, std::size_t ib) { return r[ih * nb + ib]; };

    sensitivity_result res{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t ih = 0; ih < nh; ++ih) {
        for (std::size_t ib = 0; ib < nb; ++ib) {
            double g;
            if (ib == 0)
                g = (at(ih, 1) - at(ih, 0)) / b_grid.step;
            else if (ib == nb - 1)
                g = (at(ih, nb - 1) - at(ih, nb - 2)) / b_grid.step;
            else
                g = (at(ih, ib + 1) - at(ih, ib - 1)) / (2.0 * b_grid.step);
            if (std::abs(g) > res.max_dr_db) {
                res.max_dr_db = std::abs(g);
                res.at_b_deg = bs[ib];
                res.at_h_for_db = hs[ih];
            }
        }
    }
    for (std::size_t ib = 0; ib < nb; ++ib) {
        for (std::size_t ih = 0; ih < nh; ++ih) {
            double g;
            if (ih == 0)
                g = (at(1, ib) - at(0, ib)) / h_grid.step;
            else if (ih == nh - 1)
                g = (at(nh - 1, ib) - at(nh - 2, ib)) / h_grid.step;
            else
                g = (at(ih + 1, ib) - at(ih - 1, ib)) / (2.0 * h_grid.step);
            if (std::abs(g) > res.max_dr_dh) {
                res.max_dr_dh = std::abs(g);
                res.at_h_m = hs[ih];
                res.at_b_for_dh = bs[ib];
            }
        }
    }
    res.ratio = res.max_dr_dh > 0.0 ? res.max_dr_db / res.max_dr_dh : 0.0;
    return res;
}

} // namespace aircov
