#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "aircov/coverage.hpp"
#include "aircov/errors.hpp"
#include "aircov/montecarlo.hpp"
#include "aircov/rss_dist.hpp"

using namespace aircov;

TEST_CASE("samples are pure functions of seed and index") {
    const deployment dep = make_deployment(1000.0, 50.0);
    sim_config cfg;
    cfg.seed = 42;
    CHECK(sample_rss(dep, 2000.0, cfg, 7) == sample_rss(dep, 2000.0, cfg, 7));
    CHECK(sample_rss(dep, 2000.0, cfg, 7) != sample_rss(dep, 2000.0, cfg, 8));
    sim_config other = cfg;
    other.seed = 43;
    CHECK(sample_rss(dep, 2000.0, cfg, 7) != sample_rss(dep, 2000.0, other, 7));

    cfg.mode = sim_mode::weighted_sum;
    CHECK(sample_rss(dep, 2000.0, cfg, 7) == sample_rss(dep, 2000.0, cfg, 7));
}

TEST_CASE("coverage estimate is identical across thread counts") {
    const deployment dep = make_deployment(1000.0, 50.0);
    sim_config cfg;
    cfg.seed = 42;
    cfg.n_samples = 100000;

    const auto one = estimate_coverage(dep, 2000.0, cfg, 1);
    const auto eight = estimate_coverage(dep, 2000.0, cfg, 8);
    CHECK(one.p_hat == eight.p_hat);
    CHECK(one.ci_low == eight.ci_low);
    CHECK(one.ci_high == eight.ci_high);

    // frozen point estimate for this exact seed
    CHECK(one.p_hat == 0.58034);
    CHECK(one.ci_low == doctest::Approx(0.5772782622864095).epsilon(1e-12));
    CHECK(one.ci_high == doctest::Approx(0.5833955654946607).epsilon(1e-12));
    CHECK(one.n_samples == 100000);
    CHECK(one.seed == 42);

    // closed form sits inside the interval here
    const double p = coverage_probability_circular(2000.0, dep);
    CHECK(p > one.ci_low);
    CHECK(p < one.ci_high);
}

TEST_CASE("coverage estimate input validation") {
    const deployment dep = make_deployment(1000.0, 50.0);
    sim_config cfg;
    cfg.mode = sim_mode::weighted_sum;
    CHECK_THROWS_AS((void)estimate_coverage(dep, 2000.0, cfg), validation_error);
    cfg.mode = sim_mode::mixture;
    cfg.n_samples = 99;
    CHECK_THROWS_AS((void)estimate_coverage(dep, 2000.0, cfg), validation_error);
}

TEST_CASE("empirical pdf bins every sample once") {
    const deployment dep = make_deployment(2000.0, 50.0);
    sim_config cfg;
    cfg.seed = 7;
    cfg.n_samples = 200000;
    cfg.mode = sim_mode::weighted_sum;

    pdf_target target;
    target.r_m = 3000.0;
    const auto hist = empirical_pdf(dep, target, cfg, 60);
    REQUIRE(hist.edges.size() == 61);
    REQUIRE(hist.counts.size() == 60);
    std::uint64_t total = 0;
    for (auto c : hist.counts) total += c;
    CHECK(total == cfg.n_samples);

    const double width = hist.edges[1] - hist.edges[0];
    double integral = 0.0;
    for (double d : hist.density) integral += d * width;
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));

    // edges bracket the closed-form mean at +-8 spreads
    const auto d = rss_moments(3000.0, dep);
    CHECK(hist.edges.front() ==
          doctest::Approx(d.mu_s_dbm - 8.0 * d.sigma_s_db).epsilon(1e-12));
    CHECK(hist.edges.back() ==
          doctest::Approx(d.mu_s_dbm + 8.0 * d.sigma_s_db).epsilon(1e-12));

    const auto again = empirical_pdf(dep, target, cfg, 60, 8);
    CHECK(again.counts == hist.counts);

    cfg.mode = sim_mode::mixture;
    CHECK_THROWS_AS((void)empirical_pdf(dep, target, cfg, 60), validation_error);
    cfg.mode = sim_mode::weighted_sum;
    CHECK_THROWS_AS((void)empirical_pdf(dep, target, cfg, 9), validation_error);
}

TEST_CASE("area target empirical pdf") {
    const deployment dep = make_deployment(1000.0, 50.0);
    sim_config cfg;
    cfg.seed = 11;
    cfg.n_samples = 100000;
    cfg.mode = sim_mode::weighted_sum;

    pdf_target target;
    target.area = true;
    target.side_m = 8000.0;
    const auto hist = empirical_pdf(dep, target, cfg, 64);
    std::uint64_t total = 0;
    for (auto c : hist.counts) total += c;
    CHECK(total == cfg.n_samples);
    CHECK(hist.edges.front() < hist.edges.back());

    target.side_m = 0.0;
    CHECK_THROWS_AS((void)empirical_pdf(dep, target, cfg, 64), validation_error);
}

TEST_CASE("sample moments match the closed form") {
    const deployment dep = make_deployment(2000.0, 50.0);
    sim_config cfg;
    cfg.seed = 5;
    cfg.n_samples = 200000;
    cfg.mode = sim_mode::weighted_sum;

    const auto m = sample_rss_moments(dep, 3000.0, cfg);
    const auto d = rss_moments(3000.0, dep);
    // 200k samples: the mean is good to ~4*sigma/sqrt(n) ~ 0.026 dB
    CHECK(std::abs(m.mean - d.mu_s_dbm) < 0.03);
    CHECK(std::abs(m.stddev - d.sigma_s_db) < 0.03);

    const auto threaded = sample_rss_moments(dep, 3000.0, cfg, 8);
    CHECK(threaded.mean == m.mean);
    CHECK(threaded.stddev == m.stddev);

    cfg.mode = sim_mode::mixture;
    CHECK_THROWS_AS((void)sample_rss_moments(dep, 3000.0, cfg), validation_error);
}
