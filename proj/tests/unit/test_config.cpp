#include "doctest.h"

#include <string>

#include "aircov/channel.hpp"
#include "aircov/config.hpp"
#include "aircov/errors.hpp"
#include "aircov/selfcheck.hpp"
#include "aircov/version.hpp"

using namespace aircov;

namespace {

run_config busy_config() {
    run_config c;
    c.h_m = 2000.0;
    c.t_dbm = 43.5;
    c.f_ghz = 5.5;
    c.pl_max_db = 120.25;
    c.sigma_l_db = 4.0;
    c.sigma_n_db = 9.5;
    c.epsilon = 0.75;
    c.environment = "highrise_urban";
    c.b_phi_deg = 35.0;
    c.b_theta_deg = 80.0;
    c.lambda_phi = 0.25;
    c.lambda_theta = 0.75;
    c.tilt_deg = 12.5;
    c.theta_a_deg = -30.0;
    c.a_max_db = 25.0;
    c.seed = 123456789012345ull;
    c.n_samples = 2000000;
    c.mode = "weighted_sum";
    c.format = "json";
    c.path = "out/run.json";
    c.interpolate_shadowing = true;
    c.shadow_p_mu = -89.54;
    c.shadow_q_mu = -8.47;
    c.shadow_t_mu = 0.9;
    c.shadow_p_sigma = -92.8;
    c.shadow_q_sigma = -2.9;
    c.shadow_t_sigma = 0.0285;
    c.env_j = 352.0;
    c.env_k = -1.37;
    c.env_l = -53.0;
    c.env_m = 173.8;
    c.env_n = 4.67;
    c.pack_radius_shrink = false;
    return c;
}

} // namespace

TEST_CASE("empty and comment-only files give the defaults") {
    const run_config base;
    CHECK(parse_config("") == base);
    CHECK(parse_config("  \n# a comment\n; another\n\n") == base);
}

TEST_CASE("key=value serialization round trips, defaults and busy configs") {
    const run_config base;
    CHECK(parse_config(to_key_value(base)) == base);
    CHECK(to_key_value(parse_config(to_key_value(base))) == to_key_value(base));

    const run_config busy = busy_config();
    CHECK(parse_config(to_key_value(busy)) == busy);
    CHECK(to_key_value(parse_config(to_key_value(busy))) == to_key_value(busy));
}

TEST_CASE("json serialization round trips through the same keys") {
    const run_config base;
    CHECK(parse_config(to_json_text(base)) == base);

    const run_config busy = busy_config();
    CHECK(parse_config(to_json_text(busy)) == busy);
    CHECK(to_json_text(parse_config(to_json_text(busy))) == to_json_text(busy));
}

TEST_CASE("fitted constants survive text round trips bit-exactly") {
    // the 5.5 GHz sigma row carries the awkward 0.9 slope; push the full
    // table through both file shapes
    for (double f : {2.0, 3.5, 5.5}) {
        run_config c;
        c.f_ghz = f;
        const shadowing_params row = shadowing_table(f);
        c.shadow_p_mu = row.p_mu;
        c.shadow_q_mu = row.q_mu;
        c.shadow_t_mu = row.t_mu;
        c.shadow_p_sigma = row.p_sigma;
        c.shadow_q_sigma = row.q_sigma;
        c.shadow_t_sigma = row.t_sigma;

        const run_config kv = parse_config(to_key_value(c));
        CHECK(*kv.shadow_p_mu == row.p_mu);
        CHECK(*kv.shadow_t_sigma == row.t_sigma);
        CHECK(kv == c);
        CHECK(parse_config(to_json_text(c)) == c);
    }

    for (const char* name : {"suburban", "highrise_urban"}) {
        const environment& e = environment_by_name(name);
        run_config c;
        c.environment = "custom";
        c.env_j = e.j;
        c.env_k = e.k;
        c.env_l = e.l;
        c.env_m = e.m;
        c.env_n = e.n;
        const run_config back = parse_config(to_key_value(c));
        CHECK(*back.env_j == e.j);
        CHECK(*back.env_m == e.m);
        CHECK(back == c);
    }
}

TEST_CASE("fmt_double emits the shortest round-tripping form") {
    CHECK(fmt_double(75.0) == "75");
    CHECK(fmt_double(0.1) == "0.1");
    CHECK(fmt_double(4822.65625) == "4822.65625");
    for (double v : {0.1, 1.0 / 3.0, -94.2, 0.0318, 299792458.0, 1e-9}) {
        run_config c;
        c.h_m = v;
        CHECK(parse_config("deployment.h_m = " + fmt_double(v)).h_m == v);
    }
}

TEST_CASE("unknown keys and malformed values are rejected") {
    run_config c;
    CHECK_THROWS_AS(set_config_key(c, "bogus.key", "1"), validation_error);
    CHECK_THROWS_AS(set_config_key(c, "deployment.h", "1"), validation_error);
    CHECK_THROWS_AS(set_config_key(c, "deployment.h_m", "abc"), validation_error);
    CHECK_THROWS_AS(set_config_key(c, "deployment.h_m", "12x"), validation_error);
    CHECK_THROWS_AS(set_config_key(c, "sim.seed", "-3"), validation_error);
    CHECK_THROWS_AS(set_config_key(c, "sim.seed", "1.5"), validation_error);
    CHECK_THROWS_AS(set_config_key(c, "channel.interpolate_shadowing", "yes"),
                    validation_error);

    // integers in double notation are accepted where JSON hands them over
    set_config_key(c, "sim.seed", "1e6");
    CHECK(c.seed == 1000000);
    set_config_key(c, "sim.n_samples", " 250000 ");
    CHECK(c.n_samples == 250000);
}

TEST_CASE("line-oriented parse errors carry the line number") {
    const std::string text = "# header\n\ndeployment.h_m 2000\n";
    try {
        (void)parse_config(text);
        FAIL("expected a parse error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_config("{ not json"), validation_error);
    CHECK_THROWS_AS((void)parse_config("[1, 2]"), validation_error);
    CHECK_THROWS_AS((void)load_config_file("/no/such/file.cfg"), validation_error);
}

TEST_CASE("json blocks flatten onto dotted keys") {
    const run_config c = parse_config(
        R"({"deployment": {"h_m": 2500, "environment": "highrise_urban"},
            "sim": {"seed": 7, "n_samples": 1e6},
            "output": {"format": "json"}})");
    CHECK(c.h_m == 2500.0);
    CHECK(c.environment == "highrise_urban");
    CHECK(c.seed == 7);
    CHECK(c.n_samples == 1000000);
    CHECK(c.format == "json");
    CHECK(c.b_phi_deg == 50.0);
}

TEST_CASE("deployment assembly resolves environment overrides") {
    run_config c;
    const deployment d = to_deployment(c);
    CHECK(d.env.name == "suburban");
    CHECK(d.h_m == 1000.0);
    CHECK(d.antenna.b_phi_deg == 50.0);
    CHECK(d.shadow.p_mu == shadowing_table(2.0).p_mu);

    // named environment with a partial override keeps the other constants
    run_config part;
    part.env_m = 5.0;
    const deployment dp = to_deployment(part);
    CHECK(dp.env.m == 5.0);
    CHECK(dp.env.j == environment_by_name("suburban").j);

    run_config cust;
    cust.environment = "custom";
    cust.env_j = 352.0;
    cust.env_k = -1.37;
    cust.env_l = -53.0;
    CHECK_THROWS_AS((void)to_deployment(cust), validation_error);
    cust.env_m = 173.8;
    cust.env_n = 4.67;
    const deployment dc = to_deployment(cust);
    CHECK(dc.env.j == 352.0);
    CHECK(dc.env.n == 4.67);

    run_config unk;
    unk.environment = "desert";
    CHECK_THROWS_AS((void)to_deployment(unk), validation_error);
}

TEST_CASE("deployment assembly resolves shadowing overrides") {
    run_config c;
    c.f_ghz = 3.5;
    c.shadow_p_mu = -92.9;
    CHECK_THROWS_AS((void)to_deployment(c), validation_error);

    c.shadow_q_mu = -3.14;
    c.shadow_t_mu = 0.0302;
    c.shadow_p_sigma = -89.06;
    c.shadow_q_sigma = -8.63;
    c.shadow_t_sigma = 0.0921;
    const deployment d = to_deployment(c);
    const shadowing_params row = shadowing_table(3.5);
    CHECK(d.shadow.p_mu == row.p_mu);
    CHECK(d.shadow.q_mu == row.q_mu);
    CHECK(d.shadow.t_mu == row.t_mu);
    CHECK(d.shadow.p_sigma == row.p_sigma);
    CHECK(d.shadow.q_sigma == row.q_sigma);
    CHECK(d.shadow.t_sigma == row.t_sigma);

    // off-table frequency needs the interpolation opt-in
    run_config mid;
    mid.f_ghz = 2.75;
    CHECK_THROWS_AS((void)to_deployment(mid), validation_error);
    mid.interpolate_shadowing = true;
    const deployment dm = to_deployment(mid);
    CHECK(dm.shadow.p_mu == doctest::Approx(-93.55).epsilon(1e-12));
    CHECK(dm.shadow.q_sigma == doctest::Approx(-8.75).epsilon(1e-12));
}

TEST_CASE("simulation settings map onto the sampler") {
    run_config c;
    sim_config s = to_sim_config(c);
    CHECK(s.seed == 1);
    CHECK(s.n_samples == 100000);
    CHECK(s.mode == sim_mode::mixture);

    c.mode = "weighted_sum";
    c.seed = 42;
    s = to_sim_config(c);
    CHECK(s.mode == sim_mode::weighted_sum);
    CHECK(s.seed == 42);

    c.mode = "bogus";
    CHECK_THROWS_AS((void)to_sim_config(c), validation_error);
}

TEST_CASE("startup self-check passes and the version is pinned") {
    CHECK(self_check().empty());
    CHECK(version() == std::string("0.1.0"));
}
