#include "aircov/config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "aircov/channel.hpp"
#include "aircov/errors.hpp"

namespace aircov {

std::string fmt_double(double v) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double_value(const std::string& value, const std::string& key) {
    const char* first = value.c_str();
    const char* last = first + value.size();
    if (first != last && *first == '+') ++first;
    double out = 0.0;
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw validation_error(key + ": not a number: '" + value + "'");
    return out;
}

std::uint64_t parse_u64_value(const std::string& value, const std::string& key) {
    const char* first = value.c_str();
    const char* last = first + value.size();
    if (first != last && *first == '+') ++first;
    std::uint64_t out = 0;
    const auto res = std::from_chars(first, last, out);
    if (res.ec == std::errc{} && res.ptr == last) return out;
    // JSON may hand integers over in double notation (e.g. "1e6").
    const double d = parse_double_value(value, key);
    if (!(d >= 0.0) || d != std::floor(d) || d > 1.8e19)
        throw validation_error(key + ": not a non-negative integer: '" + value + "'");
    return static_cast<std::uint64_t>(d);
}

bool parse_bool_value(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw validation_error(key + ": expected true or false, got '" + value + "'");
}

} // namespace

void set_config_key(run_config& cfg, const std::string& key, const std::string& raw) {
    const std::string value = trim(raw);
    auto dbl = [&](double& f) { f = parse_double_value(value, key); };
    auto odbl = [&](std::optional<double>& f) { f = parse_double_value(value, key); };
    auto u64 = [&](std::uint64_t& f) { f = parse_u64_value(value, key); };
    auto bln = [&](bool& f) { f = parse_bool_value(value, key); };

    if (key == "deployment.h_m") dbl(cfg.h_m);
    else if (key == "deployment.t_dbm") dbl(cfg.t_dbm);
    else if (key == "deployment.f_ghz") dbl(cfg.f_ghz);
    else if (key == "deployment.pl_max_db") dbl(cfg.pl_max_db);
    else if (key == "deployment.sigma_l_db") dbl(cfg.sigma_l_db);
    else if (key == "deployment.sigma_n_db") dbl(cfg.sigma_n_db);
    else if (key == "deployment.epsilon") dbl(cfg.epsilon);
    else if (key == "deployment.environment") cfg.environment = value;
    else if (key == "antenna.b_phi_deg") dbl(cfg.b_phi_deg);
    else if (key == "antenna.b_theta_deg") dbl(cfg.b_theta_deg);
    else if (key == "antenna.lambda_phi") dbl(cfg.lambda_phi);
    else if (key == "antenna.lambda_theta") dbl(cfg.lambda_theta);
    else if (key == "antenna.tilt_deg") dbl(cfg.tilt_deg);
    else if (key == "antenna.theta_a_deg") dbl(cfg.theta_a_deg);
    else if (key == "antenna.a_max_db") dbl(cfg.a_max_db);
    else if (key == "sim.seed") u64(cfg.seed);
    else if (key == "sim.n_samples") u64(cfg.n_samples);
    else if (key == "sim.mode") cfg.mode = value;
    else if (key == "output.format") cfg.format = value;
    else if (key == "output.path") cfg.path = value;
    else if (key == "channel.interpolate_shadowing") bln(cfg.interpolate_shadowing);
    else if (key == "channel.shadow.p_mu") odbl(cfg.shadow_p_mu);
    else if (key == "channel.shadow.q_mu") odbl(cfg.shadow_q_mu);
    else if (key == "channel.shadow.t_mu") odbl(cfg.shadow_t_mu);
    else if (key == "channel.shadow.p_sigma") odbl(cfg.shadow_p_sigma);
    else if (key == "channel.shadow.q_sigma") odbl(cfg.shadow_q_sigma);
    else if (key == "channel.shadow.t_sigma") odbl(cfg.shadow_t_sigma);
    else if (key == "environment.j") odbl(cfg.env_j);
    else if (key == "environment.k") odbl(cfg.env_k);
    else if (key == "environment.l") odbl(cfg.env_l);
    else if (key == "environment.m") odbl(cfg.env_m);
    else if (key == "environment.n") odbl(cfg.env_n);
    else if (key == "pack.radius_shrink") bln(cfg.pack_radius_shrink);
    else throw validation_error("unknown config key: " + key);
}

namespace {

void apply_json_object(run_config& cfg, const nlohmann::json& obj,
                       const std::string& prefix) {
    for (const auto& [k, v] : obj.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object())
            apply_json_object(cfg, v, key);
        else if (v.is_string())
            set_config_key(cfg, key, v.get<std::string>());
        else
            set_config_key(cfg, key, v.dump());
    }
}

} // namespace

run_config parse_config(const std::string& text) {
    run_config cfg;
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw validation_error(std::string("config JSON: ") + e.what());
        }
        if (!j.is_object())
            throw validation_error("config JSON: top level must be an object");
        apply_json_object(cfg, j, "");
        return cfg;
    }

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line " + std::to_string(lineno) +
                                   ": expected key = value");
        set_config_key(cfg, trim(t.substr(0, eq)), t.substr(eq + 1));
    }
    return cfg;
}

run_config load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

struct kv_writer {
    std::ostringstream out;
    void dbl(const char* key, double v) { out << key << " = " << fmt_double(v) << "\n"; }
    void odbl(const char* key, const std::optional<double>& v) {
        if (v) dbl(key, *v);
    }
    void u64(const char* key, std::uint64_t v) { out << key << " = " << v << "\n"; }
    void str(const char* key, const std::string& v) { out << key << " = " << v << "\n"; }
    void bln(const char* key, bool v) { out << key << " = " << (v ? "true" : "false") << "\n"; }
};

} // namespace

std::string to_key_value(const run_config& c) {
    kv_writer w;
    w.dbl("deployment.h_m", c.h_m);
    w.dbl("deployment.t_dbm", c.t_dbm);
    w.dbl("deployment.f_ghz", c.f_ghz);
    w.dbl("deployment.pl_max_db", c.pl_max_db);
    w.dbl("deployment.sigma_l_db", c.sigma_l_db);
    w.dbl("deployment.sigma_n_db", c.sigma_n_db);
    w.dbl("deployment.epsilon", c.epsilon);
    w.str("deployment.environment", c.environment);
    w.dbl("antenna.b_phi_deg", c.b_phi_deg);
    w.dbl("antenna.b_theta_deg", c.b_theta_deg);
    w.dbl("antenna.lambda_phi", c.lambda_phi);
    w.dbl("antenna.lambda_theta", c.lambda_theta);
    w.dbl("antenna.tilt_deg", c.tilt_deg);
    w.dbl("antenna.theta_a_deg", c.theta_a_deg);
    w.dbl("antenna.a_max_db", c.a_max_db);
    w.u64("sim.seed", c.seed);
    w.u64("sim.n_samples", c.n_samples);
    w.str("sim.mode", c.mode);
    w.str("output.format", c.format);
    w.str("output.path", c.path);
    w.bln("channel.interpolate_shadowing", c.interpolate_shadowing);
    w.odbl("channel.shadow.p_mu", c.shadow_p_mu);
    w.odbl("channel.shadow.q_mu", c.shadow_q_mu);
    w.odbl("channel.shadow.t_mu", c.shadow_t_mu);
    w.odbl("channel.shadow.p_sigma", c.shadow_p_sigma);
    w.odbl("channel.shadow.q_sigma", c.shadow_q_sigma);
    w.odbl("channel.shadow.t_sigma", c.shadow_t_sigma);
    w.odbl("environment.j", c.env_j);
    w.odbl("environment.k", c.env_k);
    w.odbl("environment.l", c.env_l);
    w.odbl("environment.m", c.env_m);
    w.odbl("environment.n", c.env_n);
    w.bln("pack.radius_shrink", c.pack_radius_shrink);
    return w.out.str();
}

std::string to_json_text(const run_config& c) {
    nlohmann::ordered_json j;
    j["deployment"] = {
        {"h_m", c.h_m},           {"t_dbm", c.t_dbm},
        {"f_ghz", c.f_ghz},       {"pl_max_db", c.pl_max_db},
        {"sigma_l_db", c.sigma_l_db}, {"sigma_n_db", c.sigma_n_db},
        {"epsilon", c.epsilon},   {"environment", c.environment}};
    j["antenna"] = {
        {"b_phi_deg", c.b_phi_deg},   {"b_theta_deg", c.b_theta_deg},
        {"lambda_phi", c.lambda_phi}, {"lambda_theta", c.lambda_theta},
        {"tilt_deg", c.tilt_deg},     {"theta_a_deg", c.theta_a_deg},
        {"a_max_db", c.a_max_db}};
    j["sim"] = {{"seed", c.seed}, {"n_samples", c.n_samples}, {"mode", c.mode}};
    j["output"] = {{"format", c.format}, {"path", c.path}};
    j["channel"] = {{"interpolate_shadowing", c.interpolate_shadowing}};
    if (c.shadow_p_mu || c.shadow_q_mu || c.shadow_t_mu || c.shadow_p_sigma ||
        c.shadow_q_sigma || c.shadow_t_sigma) {
        nlohmann::ordered_json s;
        if (c.shadow_p_mu) s["p_mu"] = *c.shadow_p_mu;
        if (c.shadow_q_mu) s["q_mu"] = *c.shadow_q_mu;
        if (c.shadow_t_mu) s["t_mu"] = *c.shadow_t_mu;
        if (c.shadow_p_sigma) s["p_sigma"] = *c.shadow_p_sigma;
        if (c.shadow_q_sigma) s["q_sigma"] = *c.shadow_q_sigma;
        if (c.shadow_t_sigma) s["t_sigma"] = *c.shadow_t_sigma;
        j["channel"]["shadow"] = std::move(s);
    }
    if (c.env_j || c.env_k || c.env_l || c.env_m || c.env_n) {
        nlohmann::ordered_json e;
        if (c.env_j) e["j"] = *c.env_j;
        if (c.env_k) e["k"] = *c.env_k;
        if (c.env_l) e["l"] = *c.env_l;
        if (c.env_m) e["m"] = *c.env_m;
        if (c.env_n) e["n"] = *c.env_n;
        j["environment"] = std::move(e);
    }
    j["pack"] = {{"radius_shrink", c.pack_radius_shrink}};
    return j.dump(2) + "\n";
}

bool operator==(const run_config& a, const run_config& b) {
    return a.h_m == b.h_m && a.t_dbm == b.t_dbm && a.f_ghz == b.f_ghz &&
           a.pl_max_db == b.pl_max_db && a.sigma_l_db == b.sigma_l_db &&
           a.sigma_n_db == b.sigma_n_db && a.epsilon == b.epsilon &&
           a.environment == b.environment && a.b_phi_deg == b.b_phi_deg &&
           a.b_theta_deg == b.b_theta_deg && a.lambda_phi == b.lambda_phi &&
           a.lambda_theta == b.lambda_theta && a.tilt_deg == b.tilt_deg &&
           a.theta_a_deg == b.theta_a_deg && a.a_max_db == b.a_max_db &&
           a.seed == b.seed && a.n_samples == b.n_samples && a.mode == b.mode &&
           a.format == b.format && a.path == b.path &&
           a.interpolate_shadowing == b.interpolate_shadowing &&
           a.shadow_p_mu == b.shadow_p_mu && a.shadow_q_mu == b.shadow_q_mu &&
           a.shadow_t_mu == b.shadow_t_mu && a.shadow_p_sigma == b.shadow_p_sigma &&
           a.shadow_q_sigma == b.shadow_q_sigma && a.shadow_t_sigma == b.shadow_t_sigma &&
           a.env_j == b.env_j && a.env_k == b.env_k && a.env_l == b.env_l &&
           a.env_m == b.env_m && a.env_n == b.env_n &&
           a.pack_radius_shrink == b.pack_radius_shrink;
}

deployment to_deployment(const run_config& c) {
    deployment d;
    d.h_m = c.h_m;
    d.t_dbm = c.t_dbm;
    d.f_ghz = c.f_ghz;
    d.pl_max_db = c.pl_max_db;
    d.sigma_l_db = c.sigma_l_db;
    d.sigma_n_db = c.sigma_n_db;
    d.epsilon = c.epsilon;

    const bool any_env = c.env_j || c.env_k || c.env_l || c.env_m || c.env_n;
    if (c.environment == "custom") {
        if (!(c.env_j && c.env_k && c.env_l && c.env_m && c.env_n))
            throw validation_error(
                "environment = custom requires environment.{j,k,l,m,n}");
        d.env = make_environment("custom", *c.env_j, *c.env_k, *c.env_l,
                                 *c.env_m, *c.env_n);
    } else {
        const environment& base = environment_by_name(c.environment);
        if (any_env)
            d.env = make_environment(base.name, c.env_j.value_or(base.j),
                                     c.env_k.value_or(base.k),
                                     c.env_l.value_or(base.l),
                                     c.env_m.value_or(base.m),
                                     c.env_n.value_or(base.n));
        else
            d.env = base;
    }

    const int shadow_count =
        int(c.shadow_p_mu.has_value()) + int(c.shadow_q_mu.has_value()) +
        int(c.shadow_t_mu.has_value()) + int(c.shadow_p_sigma.has_value()) +
        int(c.shadow_q_sigma.has_value()) + int(c.shadow_t_sigma.has_value());
    if (shadow_count == 6)
        d.shadow = make_shadowing_params(c.f_ghz, *c.shadow_p_mu, *c.shadow_q_mu,
                                         *c.shadow_t_mu, *c.shadow_p_sigma,
                                         *c.shadow_q_sigma, *c.shadow_t_sigma);
    else if (shadow_count != 0)
        throw validation_error("channel.shadow override requires all six coefficients");
    else
        d.shadow = shadowing_table(c.f_ghz, c.interpolate_shadowing);

    d.antenna = antenna_pattern{c.b_phi_deg,  c.b_theta_deg, c.lambda_phi,
                                c.lambda_theta, c.tilt_deg,    c.theta_a_deg,
                                c.a_max_db};
    validate(d);
    return d;
}

sim_config to_sim_config(const run_config& c) {
    sim_config s;
    s.seed = c.seed;
    s.n_samples = c.n_samples;
    if (c.mode == "mixture") s.mode = sim_mode::mixture;
    else if (c.mode == "weighted_sum") s.mode = sim_mode::weighted_sum;
    else throw validation_error("sim.mode must be mixture or weighted_sum");
    return s;
}

} // namespace aircov
