#include "aircov/packing.hpp"

#include <array>
#include <cmath>

#include "aircov/coverage.hpp"
#include "aircov/errors.hpp"
#include "aircov/parallel.hpp"

namespace aircov {

namespace {

// Largest cell radius (relative to the target radius) and resulting percent
// coverage for N cells, hexagonal and circular arrangements.
constexpr std::array<double, 10> hex_ratio = {
    1.0, 0.447, 0.500, 0.400, 0.333, 0.286, 0.333, 0.286, 0.250, 0.286};
constexpr std::array<double, 10> hex_cov = {
    100.0, 75.0, 75.0, 75.0, 75.0, 75.0, 77.8, 72.7, 69.2, 75.0};
constexpr std::array<double, 10> circle_ratio = {
    1.0, 0.500, 0.464, 0.413, 0.370, 0.333, 0.333, 0.302, 0.275, 0.261};
constexpr std::array<double, 10> circle_cov = {
    100.0, 50.0, 64.6, 68.6, 68.5, 66.6, 77.8, 73.3, 68.9, 68.7};

double hex_area(double r) { return 1.5 * std::sqrt(3.0) * r * r; }

} // namespace

const char* to_string(packing_scheme s) {
    return s == packing_scheme::hex ? "hex" : "circle";
}

packing_scheme packing_scheme_from_string(const std::string& s) {
    if (s == "hex") return packing_scheme::hex;
    if (s == "circle") return packing_scheme::circle;
    throw validation_error("unknown packing scheme: " + s);
}

packing_entry_t packing_entry(int n, packing_scheme scheme) {
    if (n < 1 || n > 10)
        throw validation_error("packing table covers 1 to 10 cells");
    const std::size_t i = static_cast<std::size_t>(n - 1);
    if (scheme == packing_scheme::hex) return {hex_ratio[i], hex_cov[i]};
    return {circle_ratio[i], circle_cov[i]};
}

double hex_coverage_n3() {
    const double r_t = 1.0;
    return 100.0 * 3.0 * hex_area(r_t / 2.0) / hex_area(r_t);
}

namespace {

double radius_at(deployment dep, double h_m, double b_deg) {
    dep.h_m = h_m;
    dep.antenna.b_phi_deg = b_deg;
    dep.antenna.b_theta_deg = b_deg;
    const coverage_radius cr = solve_coverage_radius(dep);
    return cr.covered_at_origin ? cr.r_m : 0.0;
}

struct peak { double r, h, b; };

// Coarse grid scan, then local passes at shrinking steps around the best
// cell. Acceptance is strictly-greater and cells are visited in (h, b)
// order, so the result is deterministic regardless of thread count.
peak max_radius_over_box(const deployment& tmpl, const search_box& box,
                         double h_step, double b_step, unsigned threads) {
    std::vector<double> hs, bs;
    for (double h = box.h_min_m + h_step; h <= box.h_max_m + 1e-9; h += h_step)
        hs.push_back(h);
    for (double b = box.b_min_deg + b_step; b < box.b_max_deg; b += b_step)
        bs.push_back(b);
    if (hs.empty() || bs.empty())
        throw validation_error("fleet search box is empty");

    std::vector<double> r(hs.size() * bs.size());
    parallel_for(r.size(), [&](std::size_t k) {
        r[k] = radius_at(tmpl, hs[k / bs.size()], bs[k % bs.size()]);
    }, threads);
    peak best{-1.0, 0.0, 0.0};
    for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] > best.r)
            best = {r[k], hs[k / bs.size()], bs[k % bs.size()]};

    double dh = h_step, db = b_step;
    while (dh > 1.0 || db > 0.01) {
        dh = std::max(dh / 4.0, 0.5);
        db = std::max(db / 4.0, 0.005);
        const peak centre = best;
        for (int ih = -4; ih <= 4; ++ih) {
            const double h = centre.h + dh * ih;
            if (h <= box.h_min_m || h > box.h_max_m) continue;
            for (int ib = -4; ib <= 4; ++ib) {
                const double b = centre.b + db * ib;
                if (b <= box.b_min_deg || b >= box.b_max_deg) continue;
                const double rr = radius_at(tmpl, h, b);
                if (rr > best.r) best = {rr, h, b};
            }
        }
    }
    return best;
}

} // namespace

fleet_search max_cell_radius_search(const deployment& tmpl, const search_box& box,
                                    unsigned threads) {
    validate(tmpl);
    const double h_step = 250.0, b_step = 2.0;
    const peak best = max_radius_over_box(tmpl, box, h_step, b_step, threads);
    return {h_step, b_step, tmpl.epsilon, best.r, best.h, best.b};
}

fleet_plan min_uavs(double r_t_m, double c_min_percent, packing_scheme scheme,
                    const fleet_search& search) {
    if (!(r_t_m > 0.0))
        throw validation_error("target radius must be positive");
    if (!(c_min_percent > 0.0 && c_min_percent <= 100.0))
        throw validation_error("coverage threshold must be in (0, 100]");

    fleet_plan plan;
    plan.search = search;
    for (int n = 1; n <= 10; ++n) {
        const packing_entry_t e = packing_entry(n, scheme);
        // The table coverage is quoted to a 1% tolerance.
        if (e.coverage_percent < c_min_percent - 1.0) continue;
        if (e.r_ratio * r_t_m > search.r_star_m) continue;
        plan.feasible = true;
        plan.n_uavs = n;
        plan.h_m = search.h_star_m;
        plan.b_deg = search.b_star_deg;
        plan.cell_radius_m = e.r_ratio * r_t_m;
        plan.coverage_percent = e.coverage_percent;
        break;
    }
    return plan;
}

fleet_plan min_uavs(double r_t_m, double c_min_percent, packing_scheme scheme,
                    const deployment& tmpl, const search_box& box,
                    unsigned threads) {
    return min_uavs(r_t_m, c_min_percent, scheme,
                    max_cell_radius_search(tmpl, box, threads));
}

double fleet_cell_radius(int n, double r_t_m, double c_min_percent,
                         bool radius_shrink) {
    const packing_entry_t e = packing_entry(n, packing_scheme::hex);
    double r_n = e.r_ratio * r_t_m;
    if (radius_shrink)
        r_n *= std::sqrt(std::min(1.0, c_min_percent / e.coverage_percent));
    return r_n;
}

std::optional<double> beamwidth_for_fleet(int n, double r_t_m, double h_m,
                                          double c_min_percent,
                                          const deployment& tmpl,
                                          bool radius_shrink) {
    const double r_n = fleet_cell_radius(n, r_t_m, c_min_percent, radius_shrink);
    const std::vector<double> sols = solve_beamwidths_for_radius(h_m, r_n, tmpl);
    if (sols.empty()) return std::nullopt;
    return sols.back();
}

altitude_profile altitude_options(double b_deg, double r_target_m,
                                  const deployment& tmpl,
                                  double h_min_m, double h_max_m,
                                  unsigned threads) {
    if (!(r_target_m > 0.0))
        throw validation_error("target radius must be positive");
    if (!(h_max_m > h_min_m))
        throw validation_error("altitude range is empty");

    const double step = 50.0;
    std::vector<double> hs;
    for (double h = h_min_m + step; h <= h_max_m + 1e-9; h += step)
        hs.push_back(h);
    std::vector<double> rs(hs.size());
    parallel_for(hs.size(), [&](std::size_t i) {
        rs[i] = radius_at(tmpl, hs[i], b_deg);
    }, threads);

    altitude_profile out;
    auto diff_at = [&](double h) { return radius_at(tmpl, h, b_deg) - r_target_m; };
    for (std::size_t i = 1; i < hs.size(); ++i) {
        const double f0 = rs[i - 1] - r_target_m;
        const double f1 = rs[i] - r_target_m;
        if (f0 == 0.0) {
            if (i == 1) out.h_m.push_back(hs[0]);
            continue;
        }
        if (f0 * f1 > 0.0) continue;
        double lo = hs[i - 1], hi = hs[i], flo = f0;
        while (hi - lo > 0.5) {
            const double mid = 0.5 * (lo + hi);
            const double fm = diff_at(mid);
            if (fm == 0.0) { lo = hi = mid; break; }
            if ((flo < 0.0) != (fm < 0.0)) hi = mid;
            else { lo = mid; flo = fm; }
        }
        out.h_m.push_back(0.5 * (lo + hi));
    }

    std::size_t imax = 0;
    for (std::size_t i = 1; i < rs.size(); ++i)
        if (rs[i] > rs[imax]) imax = i;
    double best_h = hs[imax], best_r = rs[imax];
    for (double dh = step; dh > 0.5; dh /= 4.0) {
        const double centre = best_h;
        for (int k = -4; k <= 4; ++k) {
            const double h = centre + dh / 4.0 * k;
            if (h <= h_min_m || h > h_max_m || k == 0) continue;
            const double r = radius_at(tmpl, h, b_deg);
            if (r > best_r) { best_r = r; best_h = h; }
        }
    }
    out.h_peak_m = best_h;
    out.r_peak_m = best_r;
    return out;
}

} // namespace aircov
