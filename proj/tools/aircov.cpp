#include <cmath>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aircov/antenna.hpp"
#include "aircov/channel.hpp"
#include "aircov/config.hpp"
#include "aircov/coverage.hpp"
#include "aircov/emit.hpp"
#include "aircov/errors.hpp"
#include "aircov/montecarlo.hpp"
#include "aircov/packing.hpp"
#include "aircov/rss_dist.hpp"
#include "aircov/selfcheck.hpp"
#include "aircov/tradeoff.hpp"
#include "aircov/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace aircov;

struct cli_state {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
    unsigned threads = 0;
    int rc = 0;
};

run_config base_config(const cli_state& st) {
    return st.config_path.empty() ? run_config{} : load_config_file(st.config_path);
}

void apply_overrides(run_config& cfg, const cli_state& st) {
    for (const auto& [key, value] : st.overrides)
        set_config_key(cfg, key, value);
}

// File values first, flags on top.
run_config resolve(const cli_state& st) {
    run_config cfg = base_config(st);
    apply_overrides(cfg, st);
    return cfg;
}

// --h would collide with the default -h,--help short alias, so subcommands
// carry a long-only help flag.
CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print this help and exit");
    return cmd;
}

// Registers a flag whose raw text lands on a config key, so a flag value
// round-trips exactly like a file value.
void cfg_opt(CLI::App* cmd, cli_state& st, const std::string& flag,
             const char* key, const char* desc) {
    cmd->add_option_function<std::string>(
        flag,
        [&st, key](const std::string& v) { st.overrides.emplace_back(key, v); },
        desc);
}

void add_common_flags(CLI::App* cmd, cli_state& st) {
    cmd->add_option("--config", st.config_path,
                    "config file (dotted key = value lines, or JSON)");
    cmd->add_option("--threads", st.threads,
                    "worker thread cap (0 = AIRCOV_THREADS env or all cores)");
    cfg_opt(cmd, st, "--format", "output.format", "output format: csv or json");
    cfg_opt(cmd, st, "--out", "output.path", "output file (default stdout)");
}

void add_deployment_flags(CLI::App* cmd, cli_state& st) {
    cfg_opt(cmd, st, "--h", "deployment.h_m", "UAV altitude in meters");
    cmd->add_option_function<std::string>(
        "--b",
        [&st](const std::string& v) {
            st.overrides.emplace_back("antenna.b_phi_deg", v);
            st.overrides.emplace_back("antenna.b_theta_deg", v);
        },
        "symmetric 3 dB beamwidth in degrees (sets both planes)");
    cfg_opt(cmd, st, "--b-phi", "antenna.b_phi_deg", "azimuth-plane beamwidth");
    cfg_opt(cmd, st, "--b-theta", "antenna.b_theta_deg", "elevation-plane beamwidth");
    cfg_opt(cmd, st, "--t", "deployment.t_dbm", "transmit power in dBm");
    cfg_opt(cmd, st, "--f", "deployment.f_ghz", "carrier frequency in GHz");
    cfg_opt(cmd, st, "--pl-max", "deployment.pl_max_db", "path loss budget in dB");
    cfg_opt(cmd, st, "--sigma-l", "deployment.sigma_l_db", "LoS variability spread in dB");
    cfg_opt(cmd, st, "--sigma-n", "deployment.sigma_n_db", "NLoS variability spread in dB");
    cfg_opt(cmd, st, "--epsilon", "deployment.epsilon", "coverage threshold in (0, 1)");
    cfg_opt(cmd, st, "--env", "deployment.environment",
            "environment: suburban, highrise_urban or custom");
    cfg_opt(cmd, st, "--tilt", "antenna.tilt_deg", "boresight downtilt in degrees");
    cfg_opt(cmd, st, "--theta-a", "antenna.theta_a_deg", "azimuth aim in degrees");
    cfg_opt(cmd, st, "--a-max", "antenna.a_max_db", "sidelobe floor depth in dB");
    cfg_opt(cmd, st, "--lambda-phi", "antenna.lambda_phi", "azimuth-plane weight");
    cfg_opt(cmd, st, "--lambda-theta", "antenna.lambda_theta", "elevation-plane weight");
    cmd->add_flag_function(
        "--interp-shadow",
        [&st](std::int64_t) {
            st.overrides.emplace_back("channel.interpolate_shadowing", "true");
        },
        "interpolate shadowing coefficients between table frequencies");
}

void add_sim_flags(CLI::App* cmd, cli_state& st) {
    cfg_opt(cmd, st, "--seed", "sim.seed", "simulation seed");
    cfg_opt(cmd, st, "--n", "sim.n_samples", "sample count");
}

void emit_json(const run_config& cfg, const json& payload) {
    write_artifact(cfg.path, json_artifact(cfg, payload.dump()));
}

json curves_manifest(const std::vector<curve>& curves) {
    json arr = json::array();
    for (const curve& c : curves) {
        json jc;
        jc["param_name"] = c.param_name;
        jc["value_name"] = c.value_name;
        json fixed;
        for (const auto& [k, v] : c.fixed) fixed[k] = v;
        jc["fixed"] = std::move(fixed);
        if (!c.fixed_label.empty()) jc["environment"] = c.fixed_label;
        json pts = json::array();
        for (const curve_point& p : c.points) {
            if (p.value) pts.push_back({p.param, *p.value});
            else pts.push_back({p.param, nullptr});
        }
        jc["points"] = std::move(pts);
        arr.push_back(std::move(jc));
    }
    return arr;
}

// --- command bodies ------------------------------------------------------

void run_self_check(cli_state& st) {
    const auto bad = self_check();
    run_config cfg = resolve(st);
    json payload;
    payload["self_check"] = bad.empty() ? "ok" : "failed";
    payload["failures"] = bad;
    emit_json(cfg, payload);
    st.rc = bad.empty() ? 0 : 4;
}

void run_gain(cli_state& st, double phi, double theta) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    json payload;
    payload["phi_deg"] = phi;
    payload["theta_deg"] = theta;
    payload["boresight_db"] =
        boresight_gain(dep.antenna.b_phi_deg, dep.antenna.b_theta_deg);
    payload["gain_db"] = gain_3d(dep.antenna, phi, theta);
    emit_json(cfg, payload);
}

void run_gain_crossover(cli_state& st, double b1, double b2, double r) {
    run_config cfg = resolve(st);
    json payload;
    payload["b1_deg"] = b1;
    payload["b2_deg"] = b2;
    payload["r_m"] = r;
    try {
        payload["h_m"] = crossover_height(b1, b2, r);
    } catch (const infeasible_error& e) {
        payload["infeasible"] = true;
        payload["reason"] = e.what();
        emit_json(cfg, payload);
        st.rc = 3;
        return;
    }
    emit_json(cfg, payload);
}

void run_coverage(cli_state& st, double x, double y) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    json payload;
    payload["x_m"] = x;
    payload["y_m"] = y;
    payload["p_cov"] = coverage_probability(dep, {x, y});
    payload["mean_rss_dbm"] = mean_rss_dbm(std::hypot(x, y), dep);
    emit_json(cfg, payload);
}

void run_radius(cli_state& st, bool detect_extra) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    radius_options opt;
    opt.detect_extra_coverage = detect_extra;
    const coverage_radius cr = solve_coverage_radius(dep, opt);
    json payload;
    payload["h_m"] = dep.h_m;
    payload["b_deg"] = dep.antenna.b_phi_deg;
    payload["r_m"] = cr.r_m;
    payload["epsilon"] = dep.epsilon;
    payload["covered_at_origin"] = cr.covered_at_origin;
    if (detect_extra) payload["extra_coverage_beyond"] = cr.extra_coverage_beyond;
    emit_json(cfg, payload);
}

void run_beamwidths(cli_state& st, double r_target) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const std::vector<double> sols =
        solve_beamwidths_for_radius(dep.h_m, r_target, dep);
    json payload;
    payload["h_m"] = dep.h_m;
    payload["r_m"] = r_target;
    payload["epsilon"] = dep.epsilon;
    payload["b_deg"] = sols;
    if (sols.empty()) {
        payload["infeasible"] = true;
        st.rc = 3;
    }
    emit_json(cfg, payload);
}

void run_map(cli_state& st, const grid_spec& grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const coverage_field field = coverage_map(dep, grid, st.threads);
    if (cfg.format == "json") {
        json payload;
        payload["grid"] = {{"x_min_m", grid.x_min_m}, {"x_max_m", grid.x_max_m},
                           {"y_min_m", grid.y_min_m}, {"y_max_m", grid.y_max_m},
                           {"nx", grid.nx},           {"ny", grid.ny}};
        payload["p_cov"] = field.p; // row-major, y outer, x inner
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    rows.reserve(grid.nx * grid.ny);
    auto axis = [](double lo, double hi, std::size_t n, std::size_t i) {
        return n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    };
    for (std::size_t iy = 0; iy < grid.ny; ++iy)
        for (std::size_t ix = 0; ix < grid.nx; ++ix)
            rows.push_back(cell(axis(grid.x_min_m, grid.x_max_m, grid.nx, ix)) + "," +
                           cell(axis(grid.y_min_m, grid.y_max_m, grid.ny, iy)) + "," +
                           cell(field.p[iy * grid.nx + ix]));
    write_artifact(cfg.path, csv_artifact(cfg, "x_m,y_m,p_cov", rows));
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    return out;
}

void run_rss_pdf(cli_state& st, double r, double s_min, double s_max,
                 std::size_t n_points) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const rss_distribution d = rss_moments(r, dep);
    if (s_min >= s_max) {
        const double spread = std::max(d.sigma_s_db, 1e-3);
        s_min = d.mu_s_dbm - 6.0 * spread;
        s_max = d.mu_s_dbm + 6.0 * spread;
    }
    const std::vector<double> s_grid = linspace(s_min, s_max, n_points);
    if (cfg.format == "json") {
        std::vector<double> density(s_grid.size());
        for (std::size_t i = 0; i < s_grid.size(); ++i)
            density[i] = rss_pdf(s_grid[i], r, dep);
        json payload;
        payload["r_m"] = r;
        payload["s_dbm"] = s_grid;
        payload["density"] = std::move(density);
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (double s : s_grid)
        rows.push_back(cell(s) + "," + cell(rss_pdf(s, r, dep)));
    write_artifact(cfg.path, csv_artifact(cfg, "s_dbm,density", rows));
}

void run_area_pdf(cli_state& st, double side, double s_min, double s_max,
                  std::size_t n_points, std::size_t n_grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    if (s_min >= s_max) {
        // Range from the per-point moments over a coarse midpoint grid.
        double mu_lo = 0.0, mu_hi = 0.0, sg_max = 0.0;
        bool first = true;
        const std::size_t n = 32;
        for (std::size_t iy = 0; iy < n; ++iy) {
            for (std::size_t ix = 0; ix < n; ++ix) {
                const double x = side * ((ix + 0.5) / n - 0.5);
                const double y = side * ((iy + 0.5) / n - 0.5);
                const rss_distribution d = rss_moments(std::hypot(x, y), dep);
                mu_lo = first ? d.mu_s_dbm : std::min(mu_lo, d.mu_s_dbm);
                mu_hi = first ? d.mu_s_dbm : std::max(mu_hi, d.mu_s_dbm);
                sg_max = std::max(sg_max, d.sigma_s_db);
                first = false;
            }
        }
        s_min = mu_lo - 6.0 * std::max(sg_max, 1e-3);
        s_max = mu_hi + 6.0 * std::max(sg_max, 1e-3);
    }
    const std::vector<double> s_grid = linspace(s_min, s_max, n_points);
    const std::vector<double> density = area_pdf(dep, side, s_grid, n_grid, st.threads);
    if (cfg.format == "json") {
        json payload;
        payload["side_m"] = side;
        payload["s_dbm"] = s_grid;
        payload["density"] = density;
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < s_grid.size(); ++i)
        rows.push_back(cell(s_grid[i]) + "," + cell(density[i]));
    write_artifact(cfg.path, csv_artifact(cfg, "s_dbm,density", rows));
}

void run_mc_coverage(cli_state& st, double r) {
    run_config cfg = resolve(st);
    cfg.mode = "mixture"; // coverage estimation samples the physical mixture
    const deployment dep = to_deployment(cfg);
    const coverage_estimate est =
        estimate_coverage(dep, r, to_sim_config(cfg), st.threads);
    if (cfg.format == "json") {
        json payload;
        payload["r_m"] = r;
        payload["seed"] = est.seed;
        payload["n_samples"] = est.n_samples;
        payload["p_hat"] = est.p_hat;
        payload["ci_low"] = est.ci_low;
        payload["ci_high"] = est.ci_high;
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows{cell(est.seed) + "," + cell(est.n_samples) + "," +
                                  cell(est.p_hat) + "," + cell(est.ci_low) + "," +
                                  cell(est.ci_high)};
    write_artifact(cfg.path,
                   csv_artifact(cfg, "seed,n_samples,p_hat,ci_low,ci_high", rows));
}

void run_mc_pdf(cli_state& st, double r, double side, std::size_t bins) {
    run_config cfg = resolve(st);
    cfg.mode = "weighted_sum"; // histogram mirrors the closed-form RSS model
    const deployment dep = to_deployment(cfg);
    pdf_target target;
    target.area = side > 0.0;
    target.r_m = r;
    target.side_m = side;
    const histogram h = empirical_pdf(dep, target, to_sim_config(cfg), bins, st.threads);
    if (cfg.format == "json") {
        json payload;
        if (target.area)
            payload["side_m"] = side;
        else
            payload["r_m"] = r;
        payload["n_samples"] = h.n_samples;
        payload["edges_dbm"] = h.edges;
        payload["density"] = h.density;
        payload["counts"] = h.counts;
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (std::size_t i = 0; i + 1 < h.edges.size(); ++i)
        rows.push_back(cell(h.edges[i]) + "," + cell(h.edges[i + 1]) + "," +
                       cell(h.density[i]));
    write_artifact(cfg.path,
                   csv_artifact(cfg, "bin_lo_dbm,bin_hi_dbm,density", rows));
}

void emit_curve_family(const run_config& cfg, const std::vector<curve>& curves,
                       bool with_env_column) {
    if (cfg.format == "json") {
        json payload;
        payload["curves"] = curves_manifest(curves);
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (const curve& c : curves) {
        // fixed[] carries the off-axis coordinate: h_m for beamwidth sweeps,
        // b_deg for height sweeps.
        for (const curve_point& p : c.points) {
            const double b = c.param_name == "b_deg" ? p.param : c.fixed[0].second;
            const double h = c.param_name == "h_m" ? p.param : [&] {
                for (const auto& [k, v] : c.fixed)
                    if (k == "h_m") return v;
                return 0.0;
            }();
            std::string row;
            if (with_env_column) {
                double f = 0.0;
                for (const auto& [k, v] : c.fixed)
                    if (k == "f_ghz") f = v;
                row = cell(f) + "," + c.fixed_label + ",";
            }
            row += cell(b) + "," + cell(h) + "," + cell(p.value);
            rows.push_back(std::move(row));
        }
    }
    const std::string columns = with_env_column
                                    ? "f_ghz,environment,b_deg,h_m,r_m"
                                    : "b_deg,h_m,r_m";
    write_artifact(cfg.path, csv_artifact(cfg, columns, rows));
}

void run_sweep_radius_beamwidth(cli_state& st, std::vector<double> heights,
                                const value_grid& b_grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    if (heights.empty()) heights.push_back(dep.h_m);
    emit_curve_family(cfg, sweep_radius_vs_beamwidth(dep, heights, b_grid, st.threads),
                      false);
}

void run_sweep_radius_height(cli_state& st, std::vector<double> beamwidths,
                             const value_grid& h_grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    if (beamwidths.empty()) beamwidths.push_back(dep.antenna.b_phi_deg);
    emit_curve_family(cfg, sweep_radius_vs_height(dep, beamwidths, h_grid, st.threads),
                      false);
}

void run_sweep_beamwidth_height(cli_state& st, std::vector<double> radii,
                                const value_grid& h_grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    if (radii.empty()) radii.push_back(3000.0);
    const auto profiles = sweep_beamwidth_vs_height(dep, radii, h_grid, st.threads);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const beamwidth_profile& prof : profiles) {
            json jp;
            jp["r_target_m"] = prof.r_target_m;
            json pts = json::array();
            for (const auto& [h, sols] : prof.solutions)
                pts.push_back({h, sols});
            jp["points"] = std::move(pts);
            arr.push_back(std::move(jp));
        }
        json payload;
        payload["profiles"] = std::move(arr);
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (const beamwidth_profile& prof : profiles) {
        for (const auto& [h, sols] : prof.solutions) {
            if (sols.empty()) {
                rows.push_back("," + cell(h) + "," + cell(prof.r_target_m));
                continue;
            }
            for (double b : sols)
                rows.push_back(cell(b) + "," + cell(h) + "," + cell(prof.r_target_m));
        }
    }
    write_artifact(cfg.path, csv_artifact(cfg, "b_deg,h_m,r_m", rows));
}

void run_sweep_freq_env(cli_state& st, std::vector<double> freqs,
                        const value_grid& b_grid) {
    run_config cfg = base_config(st);
    // This family reproduces the carrier/environment comparison, which runs
    // at a fixed operating point unless explicitly overridden.
    set_config_key(cfg, "deployment.h_m", "3000");
    set_config_key(cfg, "deployment.pl_max_db", "120");
    apply_overrides(cfg, st);
    const deployment dep = to_deployment(cfg);
    if (freqs.empty()) freqs = {2.0, 3.5, 5.5};
    emit_curve_family(cfg,
                      frequency_environment_sweep(dep, freqs, b_grid,
                                                  cfg.interpolate_shadowing, st.threads),
                      true);
}

void run_sweep_sensitivity(cli_state& st, const value_grid& h_grid,
                           const value_grid& b_grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const sensitivity_result r = sensitivity_scan(dep, h_grid, b_grid, st.threads);
    json payload;
    payload["max_dr_db_m_per_deg"] = r.max_dr_db;
    payload["at_b_deg"] = r.at_b_deg;
    payload["at_h_for_db_m"] = r.at_h_for_db;
    payload["max_dr_dh_m_per_m"] = r.max_dr_dh;
    payload["at_h_m"] = r.at_h_m;
    payload["at_b_for_dh_deg"] = r.at_b_for_dh;
    payload["ratio"] = r.ratio;
    emit_json(cfg, payload);
}

void run_gradient(cli_state& st, const std::string& wrt, const value_grid& grid) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    curve c;
    std::string columns;
    if (wrt == "beamwidth") {
        c = gradient(sweep_radius_vs_beamwidth(dep, {dep.h_m}, grid, st.threads).at(0));
        columns = "b_deg,h_m,dr_db_m_per_deg";
    } else if (wrt == "height") {
        c = gradient(
            sweep_radius_vs_height(dep, {dep.antenna.b_phi_deg}, grid, st.threads).at(0));
        columns = "b_deg,h_m,dr_dh_m_per_m";
    } else {
        throw validation_error("gradient --wrt must be beamwidth or height");
    }
    if (cfg.format == "json") {
        json payload;
        payload["curves"] = curves_manifest({c});
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (const curve_point& p : c.points) {
        const double b = wrt == "beamwidth" ? p.param : dep.antenna.b_phi_deg;
        const double h = wrt == "height" ? p.param : dep.h_m;
        rows.push_back(cell(b) + "," + cell(h) + "," + cell(p.value));
    }
    write_artifact(cfg.path, csv_artifact(cfg, columns, rows));
}

json fleet_plan_json(const fleet_plan& plan, double r_t, double c_min,
                     packing_scheme scheme) {
    json payload;
    payload["r_t_m"] = r_t;
    payload["c_min_percent"] = c_min;
    payload["scheme"] = to_string(scheme);
    payload["feasible"] = plan.feasible;
    if (plan.feasible) {
        payload["n_uavs"] = plan.n_uavs;
        payload["h_m"] = plan.h_m;
        payload["b_deg"] = plan.b_deg;
        payload["cell_radius_m"] = plan.cell_radius_m;
        payload["coverage_percent"] = plan.coverage_percent;
    }
    json search;
    search["h_step_m"] = plan.search.h_step_m;
    search["b_step_deg"] = plan.search.b_step_deg;
    search["epsilon"] = plan.search.epsilon;
    search["r_star_m"] = plan.search.r_star_m;
    search["h_star_m"] = plan.search.h_star_m;
    search["b_star_deg"] = plan.search.b_star_deg;
    payload["search"] = std::move(search);
    return payload;
}

void run_pack_min_uavs(cli_state& st, double r_t, double c_min,
                       const std::string& scheme_name) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const packing_scheme scheme = packing_scheme_from_string(scheme_name);
    const fleet_plan plan = min_uavs(r_t, c_min, scheme, dep, {}, st.threads);
    emit_json(cfg, fleet_plan_json(plan, r_t, c_min, scheme));
    if (!plan.feasible) st.rc = 3;
}

void run_pack_sweep(cli_state& st, double rt_min, double rt_max, double rt_step,
                    double c_min, const std::string& scheme_name) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const packing_scheme scheme = packing_scheme_from_string(scheme_name);
    const fleet_search search = max_cell_radius_search(dep, {}, st.threads);
    if (cfg.format == "json") {
        json pts = json::array();
        for (double rt = rt_min; rt <= rt_max + 1e-9; rt += rt_step) {
            const fleet_plan plan = min_uavs(rt, c_min, scheme, search);
            pts.push_back({{"r_t_m", rt},
                           {"n_min", plan.feasible ? json(plan.n_uavs) : json()}});
        }
        json payload;
        payload["scheme"] = to_string(scheme);
        payload["c_min_percent"] = c_min;
        payload["points"] = std::move(pts);
        emit_json(cfg, payload);
        return;
    }
    std::vector<std::string> rows;
    for (double rt = rt_min; rt <= rt_max + 1e-9; rt += rt_step) {
        const fleet_plan plan = min_uavs(rt, c_min, scheme, search);
        std::optional<double> n;
        if (plan.feasible) n = plan.n_uavs;
        rows.push_back(cell(rt) + "," + to_string(scheme) + "," + cell(c_min) + "," +
                       cell(n));
    }
    write_artifact(cfg.path, csv_artifact(cfg, "r_t_m,scheme,c_min,n_min", rows));
}

void run_pack_fleet_beamwidth(cli_state& st, int n, double r_t, double c_min) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const double r_n = fleet_cell_radius(n, r_t, c_min, cfg.pack_radius_shrink);
    const std::optional<double> b =
        beamwidth_for_fleet(n, r_t, dep.h_m, c_min, dep, cfg.pack_radius_shrink);
    json payload;
    payload["n_uavs"] = n;
    payload["r_t_m"] = r_t;
    payload["h_m"] = dep.h_m;
    payload["c_min_percent"] = c_min;
    payload["radius_shrink"] = cfg.pack_radius_shrink;
    payload["cell_radius_m"] = r_n;
    if (b) {
        payload["b_deg"] = *b;
    } else {
        payload["b_deg"] = nullptr;
        payload["infeasible"] = true;
        st.rc = 3;
    }
    emit_json(cfg, payload);
}

void run_pack_altitude(cli_state& st, double r_target, double h_min, double h_max) {
    run_config cfg = resolve(st);
    const deployment dep = to_deployment(cfg);
    const altitude_profile prof =
        altitude_options(dep.antenna.b_phi_deg, r_target, dep, h_min, h_max, st.threads);
    json payload;
    payload["b_deg"] = dep.antenna.b_phi_deg;
    payload["r_target_m"] = r_target;
    payload["h_m"] = prof.h_m;
    payload["h_peak_m"] = prof.h_peak_m;
    payload["r_peak_m"] = prof.r_peak_m;
    emit_json(cfg, payload);
}

void run_pack_entry(cli_state& st, int n, const std::string& scheme_name) {
    run_config cfg = resolve(st);
    const packing_scheme scheme = packing_scheme_from_string(scheme_name);
    const packing_entry_t e = packing_entry(n, scheme);
    json payload;
    payload["n_uavs"] = n;
    payload["scheme"] = to_string(scheme);
    payload["r_ratio"] = e.r_ratio;
    payload["coverage_percent"] = e.coverage_percent;
    emit_json(cfg, payload);
}

} // namespace

int main(int argc, char** argv) {
    {
        const auto bad = self_check();
        if (!bad.empty()) {
            for (const std::string& m : bad)
                std::cerr << "self-check: " << m << "\n";
            return 4;
        }
    }

    CLI::App app{"aircov " + std::string(version()) +
                 " - aerial base station coverage planning toolkit"};
    app.require_subcommand(0, 1);
    cli_state st;

    auto* sc = sub(&app, "self-check", "verify built-in tables and config round-trip");
    add_common_flags(sc, st);
    sc->callback([&] { run_self_check(st); });

    auto* gain = sub(&app, "gain", "antenna gain toward a ground direction");
    add_common_flags(gain, st);
    add_deployment_flags(gain, st);
    double g_phi = 0.0, g_theta = 0.0;
    gain->add_option("--phi", g_phi, "off-boresight angle in the tilt plane, degrees");
    gain->add_option("--theta", g_theta, "azimuth offset from the aim, degrees");
    auto* crossover = sub(gain, 
        "crossover", "height where a wide and a narrow beam trade places");
    add_common_flags(crossover, st);
    double c_b1 = 40.0, c_b2 = 80.0, c_r = 5000.0;
    crossover->add_option("--b1", c_b1, "first beamwidth, degrees")->required();
    crossover->add_option("--b2", c_b2, "second beamwidth, degrees")->required();
    crossover->add_option("--r", c_r, "ground distance, meters")->required();
    crossover->callback([&] { run_gain_crossover(st, c_b1, c_b2, c_r); });
    gain->callback([&] {
        if (crossover->parsed()) return;
        run_gain(st, g_phi, g_theta);
    });

    auto* cov = sub(&app, "coverage", "coverage probability at a ground point");
    add_common_flags(cov, st);
    add_deployment_flags(cov, st);
    double cov_x = 0.0, cov_y = 0.0, cov_r = -1.0;
    cov->add_option("--x", cov_x, "ground x, meters");
    cov->add_option("--y", cov_y, "ground y, meters");
    cov->add_option("--r", cov_r, "shorthand for (--x r, --y 0)");
    cov->callback([&] {
        if (cov_r >= 0.0) { cov_x = cov_r; cov_y = 0.0; }
        run_coverage(st, cov_x, cov_y);
    });

    auto* rad = sub(&app, "radius", "solve the coverage radius");
    add_common_flags(rad, st);
    add_deployment_flags(rad, st);
    bool rad_extra = false;
    rad->add_flag("--detect-extra", rad_extra,
                  "also report covered rings beyond the contiguous disc");
    rad->callback([&] { run_radius(st, rad_extra); });

    auto* bw = sub(&app, "beamwidths", "beamwidths reaching a target radius");
    add_common_flags(bw, st);
    add_deployment_flags(bw, st);
    double bw_r = 0.0;
    bw->add_option("--r", bw_r, "target coverage radius, meters")->required();
    bw->callback([&] { run_beamwidths(st, bw_r); });

    auto* map_cmd = sub(&app, "map", "coverage probability over a ground grid");
    add_common_flags(map_cmd, st);
    add_deployment_flags(map_cmd, st);
    grid_spec grid{-5000.0, 5000.0, -5000.0, 5000.0, 101, 101};
    map_cmd->add_option("--x-min", grid.x_min_m, "grid x minimum, meters");
    map_cmd->add_option("--x-max", grid.x_max_m, "grid x maximum, meters");
    map_cmd->add_option("--y-min", grid.y_min_m, "grid y minimum, meters");
    map_cmd->add_option("--y-max", grid.y_max_m, "grid y maximum, meters");
    map_cmd->add_option("--nx", grid.nx, "grid points along x");
    map_cmd->add_option("--ny", grid.ny, "grid points along y");
    map_cmd->callback([&] { run_map(st, grid); });

    auto* rpdf = sub(&app, "rss-pdf", "closed-form RSS density at a point");
    add_common_flags(rpdf, st);
    add_deployment_flags(rpdf, st);
    double rpdf_r = 0.0, rpdf_smin = 0.0, rpdf_smax = 0.0;
    std::size_t rpdf_n = 401;
    rpdf->add_option("--r", rpdf_r, "nadir distance, meters")->required();
    rpdf->add_option("--s-min", rpdf_smin, "RSS axis start, dBm (default: auto)");
    rpdf->add_option("--s-max", rpdf_smax, "RSS axis end, dBm (default: auto)");
    rpdf->add_option("--n-points", rpdf_n, "RSS axis sample count");
    rpdf->callback([&] { run_rss_pdf(st, rpdf_r, rpdf_smin, rpdf_smax, rpdf_n); });

    auto* apdf = sub(&app, "area-pdf", "RSS density averaged over a square area");
    add_common_flags(apdf, st);
    add_deployment_flags(apdf, st);
    double apdf_side = 8000.0, apdf_smin = 0.0, apdf_smax = 0.0;
    std::size_t apdf_n = 401, apdf_grid = 200;
    apdf->add_option("--side", apdf_side, "square side length, meters");
    apdf->add_option("--s-min", apdf_smin, "RSS axis start, dBm (default: auto)");
    apdf->add_option("--s-max", apdf_smax, "RSS axis end, dBm (default: auto)");
    apdf->add_option("--n-points", apdf_n, "RSS axis sample count");
    apdf->add_option("--n-grid", apdf_grid, "spatial quadrature grid per axis");
    apdf->callback([&] {
        run_area_pdf(st, apdf_side, apdf_smin, apdf_smax, apdf_n, apdf_grid);
    });

    auto* mc = sub(&app, "mc", "Monte Carlo estimators");
    mc->require_subcommand(1);
    auto* mc_cov = sub(mc, "coverage", "estimate coverage probability");
    add_common_flags(mc_cov, st);
    add_deployment_flags(mc_cov, st);
    add_sim_flags(mc_cov, st);
    double mc_r = 0.0;
    mc_cov->add_option("--r", mc_r, "nadir distance, meters")->required();
    mc_cov->callback([&] { run_mc_coverage(st, mc_r); });
    auto* mc_pdf = sub(mc, "pdf", "empirical RSS histogram");
    add_common_flags(mc_pdf, st);
    add_deployment_flags(mc_pdf, st);
    add_sim_flags(mc_pdf, st);
    double mcp_r = 0.0, mcp_side = 0.0;
    std::size_t mcp_bins = 60;
    mc_pdf->add_option("--r", mcp_r, "nadir distance, meters");
    mc_pdf->add_option("--side", mcp_side, "square side for an area target, meters");
    mc_pdf->add_option("--bins", mcp_bins, "histogram bin count");
    mc_pdf->callback([&] { run_mc_pdf(st, mcp_r, mcp_side, mcp_bins); });

    auto* sweep = sub(&app, "sweep", "trade-off curve families");
    sweep->require_subcommand(1);

    auto* s_rb = sub(sweep, "radius-beamwidth", "radius vs beamwidth curves");
    add_common_flags(s_rb, st);
    add_deployment_flags(s_rb, st);
    std::vector<double> rb_heights;
    value_grid rb_grid{1.0, 179.0, 1.0};
    s_rb->add_option("--heights", rb_heights, "altitudes, meters")->delimiter(',');
    s_rb->add_option("--b-min", rb_grid.min, "beamwidth grid start, degrees");
    s_rb->add_option("--b-max", rb_grid.max, "beamwidth grid end, degrees");
    s_rb->add_option("--b-step", rb_grid.step, "beamwidth grid step, degrees");
    s_rb->callback([&] { run_sweep_radius_beamwidth(st, rb_heights, rb_grid); });

    auto* s_rh = sub(sweep, "radius-height", "radius vs altitude curves");
    add_common_flags(s_rh, st);
    add_deployment_flags(s_rh, st);
    std::vector<double> rh_beamwidths;
    value_grid rh_grid{100.0, 10000.0, 100.0};
    s_rh->add_option("--beamwidths", rh_beamwidths, "beamwidths, degrees")->delimiter(',');
    s_rh->add_option("--h-min", rh_grid.min, "altitude grid start, meters");
    s_rh->add_option("--h-max", rh_grid.max, "altitude grid end, meters");
    s_rh->add_option("--h-step", rh_grid.step, "altitude grid step, meters");
    s_rh->callback([&] { run_sweep_radius_height(st, rh_beamwidths, rh_grid); });

    auto* s_bh = sub(sweep, "beamwidth-height",
                                       "beamwidth solutions vs altitude");
    add_common_flags(s_bh, st);
    add_deployment_flags(s_bh, st);
    std::vector<double> bh_radii;
    value_grid bh_grid{500.0, 10000.0, 500.0};
    s_bh->add_option("--radii", bh_radii, "target radii, meters")->delimiter(',');
    s_bh->add_option("--h-min", bh_grid.min, "altitude grid start, meters");
    s_bh->add_option("--h-max", bh_grid.max, "altitude grid end, meters");
    s_bh->add_option("--h-step", bh_grid.step, "altitude grid step, meters");
    s_bh->callback([&] { run_sweep_beamwidth_height(st, bh_radii, bh_grid); });

    auto* s_fe = sub(sweep, "freq-env",
                                       "radius vs beamwidth across carriers and environments");
    add_common_flags(s_fe, st);
    add_deployment_flags(s_fe, st);
    std::vector<double> fe_freqs;
    value_grid fe_grid{1.0, 179.0, 1.0};
    s_fe->add_option("--freqs", fe_freqs, "carrier frequencies, GHz")->delimiter(',');
    s_fe->add_option("--b-min", fe_grid.min, "beamwidth grid start, degrees");
    s_fe->add_option("--b-max", fe_grid.max, "beamwidth grid end, degrees");
    s_fe->add_option("--b-step", fe_grid.step, "beamwidth grid step, degrees");
    s_fe->callback([&] { run_sweep_freq_env(st, fe_freqs, fe_grid); });

    auto* s_sens = sub(sweep, "sensitivity",
                                         "largest radius slopes over the (h, B) plane");
    add_common_flags(s_sens, st);
    add_deployment_flags(s_sens, st);
    // The altitude step is much finer than the beamwidth step on purpose: the
    // steepest slopes sit on the coverage-feasibility cliffs, and a 100 m step
    // under-resolves the altitude cliff relative to a 1 degree beamwidth step.
    value_grid sh_grid{10.0, 25000.0, 10.0};
    value_grid sb_grid{1.0, 179.0, 1.0};
    s_sens->add_option("--h-min", sh_grid.min, "altitude grid start, meters");
    s_sens->add_option("--h-max", sh_grid.max, "altitude grid end, meters");
    s_sens->add_option("--h-step", sh_grid.step, "altitude grid step, meters");
    s_sens->add_option("--b-min", sb_grid.min, "beamwidth grid start, degrees");
    s_sens->add_option("--b-max", sb_grid.max, "beamwidth grid end, degrees");
    s_sens->add_option("--b-step", sb_grid.step, "beamwidth grid step, degrees");
    s_sens->callback([&] { run_sweep_sensitivity(st, sh_grid, sb_grid); });

    auto* grad = sub(&app, "gradient", "finite-difference slope of a radius curve");
    add_common_flags(grad, st);
    add_deployment_flags(grad, st);
    std::string grad_wrt = "beamwidth";
    value_grid grad_bgrid{1.0, 179.0, 1.0};
    value_grid grad_hgrid{100.0, 10000.0, 100.0};
    grad->add_option("--wrt", grad_wrt, "differentiate along: beamwidth or height");
    grad->add_option_function<double>("--grid-min",
        [&](double v) { grad_bgrid.min = grad_hgrid.min = v; }, "sweep grid start");
    grad->add_option_function<double>("--grid-max",
        [&](double v) { grad_bgrid.max = grad_hgrid.max = v; }, "sweep grid end");
    grad->add_option_function<double>("--grid-step",
        [&](double v) { grad_bgrid.step = grad_hgrid.step = v; }, "sweep grid step");
    grad->callback([&] {
        run_gradient(st, grad_wrt, grad_wrt == "height" ? grad_hgrid : grad_bgrid);
    });

    auto* pack = sub(&app, "pack", "multi-UAV packing planners");
    pack->require_subcommand(1);

    auto* p_min = sub(pack, "min-uavs", "smallest fleet covering a target");
    add_common_flags(p_min, st);
    add_deployment_flags(p_min, st);
    double pm_rt = 0.0, pm_cmin = 70.0;
    std::string pm_scheme = "hex";
    p_min->add_option("--rt", pm_rt, "target region radius, meters")->required();
    p_min->add_option("--c-min", pm_cmin, "coverage threshold, percent");
    p_min->add_option("--scheme", pm_scheme, "packing scheme: hex or circle");
    p_min->callback([&] { run_pack_min_uavs(st, pm_rt, pm_cmin, pm_scheme); });

    auto* p_sweep = sub(pack, "sweep", "minimum fleet size over target radii");
    add_common_flags(p_sweep, st);
    add_deployment_flags(p_sweep, st);
    double ps_rtmin = 250.0, ps_rtmax = 14000.0, ps_rtstep = 250.0, ps_cmin = 70.0;
    std::string ps_scheme = "hex";
    p_sweep->add_option("--rt-min", ps_rtmin, "target radius grid start, meters");
    p_sweep->add_option("--rt-max", ps_rtmax, "target radius grid end, meters");
    p_sweep->add_option("--rt-step", ps_rtstep, "target radius grid step, meters");
    p_sweep->add_option("--c-min", ps_cmin, "coverage threshold, percent");
    p_sweep->add_option("--scheme", ps_scheme, "packing scheme: hex or circle");
    p_sweep->callback([&] {
        run_pack_sweep(st, ps_rtmin, ps_rtmax, ps_rtstep, ps_cmin, ps_scheme);
    });

    auto* p_fleet = sub(pack, "fleet-beamwidth",
                                         "per-UAV beamwidth for an N-UAV hex fleet");
    add_common_flags(p_fleet, st);
    add_deployment_flags(p_fleet, st);
    int pf_n = 1;
    double pf_rt = 0.0, pf_cmin = 70.0;
    bool pf_noshrink = false;
    p_fleet->add_option("--n", pf_n, "fleet size, 1..10")->required();
    p_fleet->add_option("--rt", pf_rt, "target region radius, meters")->required();
    p_fleet->add_option("--c-min", pf_cmin, "coverage threshold, percent");
    p_fleet->add_flag("--no-shrink", pf_noshrink,
                      "keep full packing cell radius even when c_min is below the table coverage");
    p_fleet->callback([&] {
        if (pf_noshrink)
            st.overrides.emplace_back("pack.radius_shrink", "false");
        run_pack_fleet_beamwidth(st, pf_n, pf_rt, pf_cmin);
    });

    auto* p_alt = sub(pack, "altitude", "altitudes reaching a cell radius");
    add_common_flags(p_alt, st);
    add_deployment_flags(p_alt, st);
    double pa_r = 0.0, pa_hmin = 0.0, pa_hmax = 5000.0;
    p_alt->add_option("--r-target", pa_r, "cell radius, meters")->required();
    p_alt->add_option("--h-min", pa_hmin, "altitude range start, meters");
    p_alt->add_option("--h-max", pa_hmax, "altitude range end, meters");
    p_alt->callback([&] { run_pack_altitude(st, pa_r, pa_hmin, pa_hmax); });

    auto* p_entry = sub(pack, "entry", "one packing table row");
    add_common_flags(p_entry, st);
    int pe_n = 1;
    std::string pe_scheme = "hex";
    p_entry->add_option("--n", pe_n, "cell count, 1..10")->required();
    p_entry->add_option("--scheme", pe_scheme, "packing scheme: hex or circle");
    p_entry->callback([&] { run_pack_entry(st, pe_n, pe_scheme); });

    try {
        app.parse(argc, argv);
        if (app.get_subcommands().empty()) {
            std::cerr << app.help() << std::flush;
            return 64;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ExtrasError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 64;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const infeasible_error& e) {
        json body;
        body["infeasible"] = true;
        body["reason"] = e.what();
        std::cout << body.dump(2) << "\n";
        return 3;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return st.rc;
}
