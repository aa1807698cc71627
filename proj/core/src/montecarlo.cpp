#include "aircov/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "aircov/antenna.hpp"
#include "aircov/coverage.hpp"
#include "aircov/errors.hpp"
#include "aircov/parallel.hpp"
#include "aircov/rng.hpp"
#include "aircov/rss_dist.hpp"

namespace aircov {

namespace {

constexpr std::size_t mc_block = 8192;

// Link-budget terms that are fixed for a given ground distance; hoisted so
// the per-sample work is just variate generation and arithmetic.
struct link_terms {
    double a1;
    double p_los;
    double mu_sh;
    double sigma_sh;
};

link_terms terms_at(const deployment& dep, double r_m) {
    const geometry g = make_geometry(dep.h_m, r_m);
    const double gain = gain_circular(dep.antenna.b_phi_deg, dep.h_m, r_m,
                                      dep.antenna.tilt_deg);
    const auto sh = shadowing_stats(dep.shadow, g.elevation_deg);
    return {dep.t_dbm + gain - fspl_db(dep.f_ghz, g.d_m),
            los_probability(dep.env, g.elevation_deg),
            sh.mu_db, sh.sigma_db};
}

double draw_mixture(const deployment& dep, const link_terms& lt,
                    std::uint64_t seed, std::uint64_t index) {
    const double u = rng::uniform_lane(seed, index, rng::lane::bernoulli);
    if (u < lt.p_los) {
        const double z_l = rng::normal_lane(seed, index, rng::lane::x_l);
        return lt.a1 - dep.sigma_l_db * z_l;
    }
    const double z_n = rng::normal_lane(seed, index, rng::lane::x_n);
    const double z_s = rng::normal_lane(seed, index, rng::lane::x_s);
    const double x_s = lt.mu_sh + lt.sigma_sh * z_s;
    return lt.a1 - x_s - dep.sigma_n_db * z_n;
}

double draw_weighted_sum(const deployment& dep, const link_terms& lt,
                         std::uint64_t seed, std::uint64_t index) {
    const double z_l = rng::normal_lane(seed, index, rng::lane::x_l);
    const double z_n = rng::normal_lane(seed, index, rng::lane::x_n);
    const double z_s = rng::normal_lane(seed, index, rng::lane::x_s);
    const double r_l = lt.a1 - dep.sigma_l_db * z_l;
    const double r_n = lt.a1 - (lt.mu_sh + lt.sigma_sh * z_s) - dep.sigma_n_db * z_n;
    return lt.p_los * r_l + (1.0 - lt.p_los) * r_n;
}

} // namespace

double sample_rss(const deployment& dep, double r_m, const sim_config& cfg,
                  std::uint64_t index) {
    const link_terms lt = terms_at(dep, r_m);
    return cfg.mode == sim_mode::mixture
               ? draw_mixture(dep, lt, cfg.seed, index)
               : draw_weighted_sum(dep, lt, cfg.seed, index);
}

coverage_estimate estimate_coverage(const deployment& dep, double r_m,
                                    const sim_config& cfg, unsigned threads) {
    validate(dep);
    if (cfg.mode != sim_mode::mixture)
        throw validation_error("estimate_coverage: needs mixture mode");
    if (cfg.n_samples < 100)
        throw validation_error("estimate_coverage: need at least 100 samples "
                               "for a meaningful interval");

    const link_terms lt = terms_at(dep, r_m);
    const double gamma = dep.gamma_dbm();
    const std::size_t n = static_cast<std::size_t>(cfg.n_samples);
    const std::size_t n_blocks = (n + mc_block - 1) / mc_block;
    std::vector<std::uint64_t> hits(n_blocks, 0);
    parallel_blocks(n, mc_block, [&](std::size_t b, std::size_t beg, std::size_t end) {
        std::uint64_t c = 0;
        for (std::size_t i = beg; i < end; ++i)
            if (draw_mixture(dep, lt, cfg.seed, i) >= gamma) ++c;
        hits[b] = c;
    }, threads);

    std::uint64_t covered = 0;
    for (std::uint64_t c : hits) covered += c;
    const wilson_interval w = wilson_score(covered, cfg.n_samples);
    return {w.p_hat, w.low, w.high, cfg.n_samples, cfg.seed};
}

histogram empirical_pdf(const deployment& dep, const pdf_target& target,
                        const sim_config& cfg, std::size_t bins,
                        unsigned threads) {
    validate(dep);
    if (cfg.mode != sim_mode::weighted_sum)
        throw validation_error("empirical_pdf: needs weighted_sum mode");
    if (bins < 10)
        throw validation_error("empirical_pdf: need at least 10 bins");
    if (cfg.n_samples < 1)
        throw validation_error("empirical_pdf: need samples");

    // Bin range: mean +- 8 spreads. For area targets, span the extremes of
    // the per-point moments over a coarse midpoint scan of the square.
    double lo, hi;
    if (!target.area) {
        const rss_distribution m = rss_moments(target.r_m, dep);
        lo = m.mu_s_dbm - 8.0 * m.sigma_s_db;
        hi = m.mu_s_dbm + 8.0 * m.sigma_s_db;
    } else {
        if (!(target.side_m > 0.0))
            throw validation_error("empirical_pdf: area side must be positive");
        constexpr std::size_t scan = 64;
        double mu_min = 0.0, mu_max = 0.0, sg_max = 0.0;
        bool first = true;
        for (std::size_t iy = 0; iy < scan; ++iy) {
            const double y = (-0.5 + (static_cast<double>(iy) + 0.5) / scan) * target.side_m;
            for (std::size_t ix = 0; ix < scan; ++ix) {
                const double x = (-0.5 + (static_cast<double>(ix) + 0.5) / scan) * target.side_m;
                const rss_distribution m = rss_moments(std::hypot(x, y), dep);
                if (first || m.mu_s_dbm < mu_min) mu_min = m.mu_s_dbm;
                if (first || m.mu_s_dbm > mu_max) mu_max = m.mu_s_dbm;
                sg_max = std::max(sg_max, m.sigma_s_db);
                first = false;
            }
        }
        lo = mu_min - 8.0 * sg_max;
        hi = mu_max + 8.0 * sg_max;
    }

    const double width = (hi - lo) / static_cast<double>(bins);
    const std::size_t n = static_cast<std::size_t>(cfg.n_samples);
    const std::size_t n_blocks = (n + mc_block - 1) / mc_block;
    std::vector<std::vector<std::uint64_t>> block_counts(n_blocks);

    link_terms point_lt{};
    if (!target.area) point_lt = terms_at(dep, target.r_m);

    parallel_blocks(n, mc_block, [&](std::size_t b, std::size_t beg, std::size_t end) {
        std::vector<std::uint64_t> local(bins, 0);
        for (std::size_t i = beg; i < end; ++i) {
            double s;
            if (target.area) {
                const double ux = rng::uniform_lane(cfg.seed, i, rng::lane::px);
                const double uy = rng::uniform_lane(cfg.seed, i, rng::lane::py);
                const double x = (ux - 0.5) * target.side_m;
                const double y = (uy - 0.5) * target.side_m;
                s = draw_weighted_sum(dep, terms_at(dep, std::hypot(x, y)), cfg.seed, i);
            } else {
                s = draw_weighted_sum(dep, point_lt, cfg.seed, i);
            }
            long idx = static_cast<long>(std::floor((s - lo) / width));
            if (idx < 0) idx = 0;
            if (idx >= static_cast<long>(bins)) idx = static_cast<long>(bins) - 1;
            ++local[static_cast<std::size_t>(idx)];
        }
        block_counts[b] = std::move(local);
    }, threads);

    histogram h;
    h.n_samples = cfg.n_samples;
    h.counts.assign(bins, 0);
    for (const auto& local : block_counts)
        for (std::size_t k = 0; k < bins; ++k)
            h.counts[k] += local[k];
    h.edges.resize(bins + 1);
    for (std::size_t k = 0; k <= bins; ++k)
        h.edges[k] = lo + width * static_cast<double>(k);
    h.density.resize(bins);
    const double norm = 1.0 / (static_cast<double>(cfg.n_samples) * width);
    for (std::size_t k = 0; k < bins; ++k)
        h.density[k] = static_cast<double>(h.counts[k]) * norm;
    return h;
}

sample_moments sample_rss_moments(const deployment& dep, double r_m,
                                  const sim_config& cfg, unsigned threads) {
    validate(dep);
    if (cfg.mode != sim_mode::weighted_sum)
        throw validation_error("sample_rss_moments: needs weighted_sum mode");
    if (cfg.n_samples < 2)
        throw validation_error("sample_rss_moments: need at least 2 samples");

    const link_terms lt = terms_at(dep, r_m);
    const std::size_t n = static_cast<std::size_t>(cfg.n_samples);
    const std::size_t n_blocks = (n + mc_block - 1) / mc_block;
    std::vector<double> sums(n_blocks, 0.0), sqsums(n_blocks, 0.0);
    parallel_blocks(n, mc_block, [&](std::size_t b, std::size_t beg, std::size_t end) {
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t i = beg; i < end; ++i) {
            const double s = draw_weighted_sum(dep, lt, cfg.seed, i);
            s1 += s;
            s2 += s * s;
        }
        sums[b] = s1;
        sqsums[b] = s2;
    }, threads);

    const double s1 = block_pairwise_sum(sums);
    const double s2 = block_pairwise_sum(sqsums);
    const double mean = s1 / static_cast<double>(n);
    const double var = std::max(0.0, s2 / static_cast<double>(n) - mean * mean);
    return {mean, std::sqrt(var)};
}

} // namespace aircov
