#include <benchmark/benchmark.h>

#include "aircov/coverage.hpp"
#include "aircov/montecarlo.hpp"
#include "aircov/packing.hpp"
#include "aircov/rss_dist.hpp"

namespace {

using namespace aircov;

// closed circular form, the inner loop of every solver and sweep
void bm_coverage_circular(benchmark::State& state) {
    const deployment dep = make_deployment(2000.0, 50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(coverage_probability_circular(1500.0, dep));
}
BENCHMARK(bm_coverage_circular);

// general two-axis pattern at an off-axis point (no circular shortcut)
void bm_coverage_point(benchmark::State& state) {
    deployment dep = make_deployment(2000.0, 50.0);
    dep.antenna.b_theta_deg = 35.0;
    dep.antenna.tilt_deg = 10.0;
    const ground_point pt{900.0, -1200.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(coverage_probability(dep, pt));
}
BENCHMARK(bm_coverage_point);

// two-component mixture density at a single (signal, radius) pair
void bm_rss_pdf(benchmark::State& state) {
    const deployment dep = make_deployment(2000.0, 50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(rss_pdf(-80.0, 1500.0, dep));
}
BENCHMARK(bm_rss_pdf);

// outward scan plus bisection down to 1 m
void bm_solve_radius(benchmark::State& state) {
    const deployment dep = make_deployment(3000.0, 60.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_coverage_radius(dep).r_m);
}
BENCHMARK(bm_solve_radius);

// grid search behind the fleet planner; dominated by radius solves
void bm_fleet_search(benchmark::State& state) {
    const deployment tmpl = make_deployment(1000.0, 50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_cell_radius_search(tmpl).r_star_m);
}
BENCHMARK(bm_fleet_search);

// sampler throughput; items/s is samples per second
void bm_mc_coverage(benchmark::State& state) {
    const deployment dep = make_deployment(1000.0, 50.0);
    sim_config cfg;
    cfg.seed = 42;
    cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_coverage(dep, 2000.0, cfg).p_hat);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_mc_coverage)->Arg(10000)->Arg(100000);

// weighted-sum histogram over the covered disc
void bm_mc_pdf(benchmark::State& state) {
    const deployment dep = make_deployment(2000.0, 50.0);
    sim_config cfg;
    cfg.seed = 7;
    cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
    cfg.mode = sim_mode::weighted_sum;
    pdf_target target;
    target.r_m = 3000.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_pdf(dep, target, cfg, 50).counts.size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_mc_pdf)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
