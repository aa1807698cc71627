#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aircov/deployment.hpp"
#include "aircov/montecarlo.hpp"

namespace aircov {

// Flat run configuration. Files come in two shapes, detected by the first
// non-blank character: a '{' means JSON with one object per block, anything
// else is parsed as dotted key = value lines ('#' comments allowed).
//
//   deployment.h_m = 2000
//   antenna.b_phi_deg = 45
//
// Doubles are serialized shortest-round-trip, so write/parse/write is
// byte-stable and every constant survives a round trip bit-exactly.
struct run_config {
    double h_m = 1000.0;
    double t_dbm = 40.0;
    double f_ghz = 2.0;
    double pl_max_db = 115.0;
    double sigma_l_db = 3.0;
    double sigma_n_db = 8.0;
    double epsilon = 0.8;
    std::string environment = "suburban";

    double b_phi_deg = 50.0;
    double b_theta_deg = 50.0;
    double lambda_phi = 0.5;
    double lambda_theta = 0.5;
    double tilt_deg = 0.0;
    double theta_a_deg = 0.0;
    double a_max_db = 20.0;

    std::uint64_t seed = 1;
    std::uint64_t n_samples = 100000;
    std::string mode = "mixture"; // mixture | weighted_sum

    std::string format = "csv"; // csv | json
    std::string path;           // empty writes to stdout

    bool interpolate_shadowing = false;

    // Optional full shadowing-row override; all six or none.
    std::optional<double> shadow_p_mu, shadow_q_mu, shadow_t_mu;
    std::optional<double> shadow_p_sigma, shadow_q_sigma, shadow_t_sigma;

    // Optional LoS-fit overrides; applied on top of the named environment,
    // or defining it outright when environment = "custom" (then all five
    // are required).
    std::optional<double> env_j, env_k, env_l, env_m, env_n;

    bool pack_radius_shrink = true;
};

// Assign one dotted key; the value string is parsed per the key's type.
// Unknown keys and malformed values raise validation errors.
void set_config_key(run_config& cfg, const std::string& key, const std::string& value);

// Parse either accepted file shape from text / from a file on disk.
run_config parse_config(const std::string& text);
run_config load_config_file(const std::string& path);

// Serialize with every resolved value spelled out (optional blocks only
// when present), in a fixed key order.
std::string to_key_value(const run_config& cfg);
std::string to_json_text(const run_config& cfg);

bool operator==(const run_config& a, const run_config& b);

deployment to_deployment(const run_config& cfg);
sim_config to_sim_config(const run_config& cfg);

// Shortest decimal form that parses back to the same bits.
std::string fmt_double(double v);

} // namespace aircov
