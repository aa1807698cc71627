#include "aircov/rss_dist.hpp"

#include <cmath>

#include "aircov/antenna.hpp"
#include "aircov/coverage.hpp"
#include "aircov/errors.hpp"
#include "aircov/parallel.hpp"

namespace aircov {

rss_distribution rss_moments(double r_m, const deployment& dep) {
    const geometry g = make_geometry(dep.h_m, r_m);
    const double gain = gain_circular(dep.antenna.b_phi_deg, dep.h_m, r_m,
                                      dep.antenna.tilt_deg);
    const double p_l = los_probability(dep.env, g.elevation_deg);
    const double p_n = 1.0 - p_l;
    const auto sh = shadowing_stats(dep.shadow, g.elevation_deg);

    rss_distribution out;
    out.a1_dbm = dep.t_dbm + gain - fspl_db(dep.f_ghz, g.d_m);
    out.p_los = p_l;
    out.mu_s_dbm = out.a1_dbm - p_n * sh.mu_db;
    const double var_l = p_l * dep.sigma_l_db * (p_l * dep.sigma_l_db);
    const double var_n = p_n * p_n *
        (dep.sigma_n_db * dep.sigma_n_db + sh.sigma_db * sh.sigma_db);
    out.sigma_s_db = std::sqrt(var_l + var_n);
    return out;
}

double rss_pdf(double s_dbm, double r_m, const deployment& dep) {
    const rss_distribution m = rss_moments(r_m, dep);
    return normal_pdf(s_dbm, m.mu_s_dbm, m.sigma_s_db);
}

rss_components component_moments(double r_m, const deployment& dep) {
    const geometry g = make_geometry(dep.h_m, r_m);
    const auto sh = shadowing_stats(dep.shadow, g.elevation_deg);
    const rss_distribution m = rss_moments(r_m, dep);
    const double p_l = m.p_los;
    const double p_n = 1.0 - p_l;

    rss_components c;
    c.s_los = {p_l * m.a1_dbm, p_l * dep.sigma_l_db, p_l == 0.0};
    c.s_nlos = {p_n * (m.a1_dbm - sh.mu_db),
                p_n * std::sqrt(dep.sigma_n_db * dep.sigma_n_db +
                                sh.sigma_db * sh.sigma_db),
                p_n == 0.0};
    return c;
}

std::pair<double, double> component_pdfs(double s_dbm, double r_m, const deployment& dep) {
    const rss_components c = component_moments(r_m, dep);
    const double f_l = c.s_los.degenerate ? 0.0
                                          : normal_pdf(s_dbm, c.s_los.mean, c.s_los.sigma);
    const double f_n = c.s_nlos.degenerate ? 0.0
                                           : normal_pdf(s_dbm, c.s_nlos.mean, c.s_nlos.sigma);
    return {f_l, f_n};
}

namespace {

// One midpoint pass at resolution n. Cell moments are computed once per cell,
// the s loop is a plain Gaussian evaluation. Row partials are combined in row
// order so the result does not depend on the thread count.
std::vector<double> area_pdf_pass(const deployment& dep, double side_m,
                                  const std::vector<double>& s_grid,
                                  std::size_t n, unsigned threads) {
    const double cell = side_m / static_cast<double>(n);
    const double w = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    std::vector<std::vector<double>> rows(n);
    parallel_for(n, [&](std::size_t iy) {
        std::vector<double> acc(s_grid.size(), 0.0);
        const double y = -0.5 * side_m + (static_cast<double>(iy) + 0.5) * cell;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const double x = -0.5 * side_m + (static_cast<double>(ix) + 0.5) * cell;
            const rss_distribution m = rss_moments(std::hypot(x, y), dep);
            const double inv = 1.0 / (m.sigma_s_db * std::sqrt(2.0 * pi));
            for (std::size_t k = 0; k < s_grid.size(); ++k) {
                const double t = (s_grid[k] - m.mu_s_dbm) / m.sigma_s_db;
                acc[k] += inv * std::exp(-0.5 * t * t);
            }
        }
        rows[iy] = std::move(acc);
    }, threads);

    std::vector<double> out(s_grid.size(), 0.0);
    for (std::size_t iy = 0; iy < n; ++iy)
        for (std::size_t k = 0; k < s_grid.size(); ++k)
            out[k] += rows[iy][k];
    for (double& v : out) v *= w;
    return out;
}

} // namespace

std::vector<double> area_pdf(const deployment& dep, double side_m,
                             const std::vector<double>& s_grid,
                             std::size_t n_grid, unsigned threads) {
    validate(dep);
    if (!(side_m > 0.0))
        throw validation_error("area_pdf: region side must be positive");
    if (s_grid.empty())
        throw validation_error("area_pdf: empty evaluation grid");
    if (n_grid < 2)
        throw validation_error("area_pdf: spatial grid too coarse");

    const std::vector<double> coarse = area_pdf_pass(dep, side_m, s_grid, n_grid, threads);
    const std::vector<double> fine = area_pdf_pass(dep, side_m, s_grid, 2 * n_grid, threads);

    double peak = 0.0;
    for (double v : fine) peak = std::max(peak, v);
    if (peak > 0.0) {
        double worst = 0.0;
        for (std::size_t k = 0; k < s_grid.size(); ++k)
            worst = std::max(worst, std::abs(coarse[k] - fine[k]));
        if (worst / peak > 1e-3)
            throw numerical_error("area_pdf: quadrature not converged at this "
                                  "grid resolution; raise n_grid");
    }
    return coarse;
}

} // namespace aircov
