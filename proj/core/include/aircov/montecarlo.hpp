#ifndef AIRCOV_MONTECARLO_HPP
#define AIRCOV_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "aircov/deployment.hpp"
#include "aircov/math.hpp"

namespace aircov {

enum class sim_mode { mixture, weighted_sum };

struct sim_config {
    std::uint64_t seed = 1;
    std::uint64_t n_samples = 100000;
    sim_mode mode = sim_mode::mixture;
};

// One RSS draw for sample `index`; a pure function of (dep, r, seed, index),
// so runs are reproducible regardless of threading or evaluation order.
//
// mixture: Bernoulli LoS state, then the matching single-state RSS.
// weighted_sum: all three variates drawn, states combined with probability
// weights (the model behind the closed-form RSS distribution).
double sample_rss(const deployment& dep, double r_m, const sim_config& cfg,
                  std::uint64_t index);

struct coverage_estimate {
    double p_hat;
    double ci_low;
    double ci_high;
    std::uint64_t n_samples;
    std::uint64_t seed;
};

// Fraction of mixture samples with RSS >= gamma, with a Wilson 95% interval.
// Requires mixture mode and at least 100 samples.
coverage_estimate estimate_coverage(const deployment& dep, double r_m,
                                    const sim_config& cfg, unsigned threads = 0);

struct histogram {
    std::vector<double> edges;   // bins+1 edges, uniform
    std::vector<double> density; // per-dB density, integrates to 1
    std::vector<std::uint64_t> counts;
    std::uint64_t n_samples;
};

struct pdf_target {
    bool area = false;
    double r_m = 0.0;    // point target: nadir distance
    double side_m = 0.0; // area target: square side, nadir-centered
};

// Normalized RSS histogram from weighted-sum draws, binned over
// mean +- 8 spreads (out-of-range draws land in the edge bins). Area targets
// draw ground points uniformly over the square using the px/py lanes.
// Requires weighted_sum mode and at least 10 bins.
histogram empirical_pdf(const deployment& dep, const pdf_target& target,
                        const sim_config& cfg, std::size_t bins,
                        unsigned threads = 0);

// Deterministic sample mean/std over the weighted-sum stream (block-pairwise
// reduction). Used by tests to cross-check the closed-form moments.
struct sample_moments {
    double mean;
    double stddev;
};
sample_moments sample_rss_moments(const deployment& dep, double r_m,
                                  const sim_config& cfg, unsigned threads = 0);

} // namespace aircov

#endif
